class Calc {
  double run(int n) {
    /*@pos*/ double rate = 0.5;
    /*@pos*/ double total = 1.0;
    int count = 0;
    float ratio = 1;
    String label = "x";
    return rate * total;
  }
}
