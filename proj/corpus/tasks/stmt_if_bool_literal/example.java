class Flags {
  void check(int x, boolean flag) {
    /*@pos*/ if (true) { x = 1; }
    /*@pos*/ if (false) { x = 2; }
    if (x > 0) { x = 3; }
    if (flag) { x = 4; }
    if (x == 1) { x = 5; }
  }
}
