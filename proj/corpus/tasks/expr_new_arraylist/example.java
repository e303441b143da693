class Store {
  void fill() {
    List a = /*@pos*/ new ArrayList();
    List b = /*@pos*/ new ArrayList(16);
    Map m = new HashMap();
    a.add(b);
  }
}
