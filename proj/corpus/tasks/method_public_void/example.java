class Worker {
  /*@pos*/ public void start() {}
  /*@pos*/ public void stop() {}
  private void reset() {}
  public int size() { return 0; }
  public static void main(String args) {}
}
