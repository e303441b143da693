class Ledger {
  void book() {
    /*@pos*/ float cashFlow = 1;
    /*@pos*/ float cashBook = 2;
    float total = 3;
    double cashRate = 0.1;
    int cashCount = 4;
  }
}
