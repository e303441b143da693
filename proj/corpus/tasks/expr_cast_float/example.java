class Mix {
  float mix(int a, double b) {
    float x = /*@pos*/ (float) a;
    float y = /*@pos*/ (float) b;
    int z = (int) b;
    return x + y + z;
  }
}
