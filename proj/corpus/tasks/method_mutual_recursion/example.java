class Parity {
  /*@pos*/ int isEven(int n) { return isOdd(n - 1); }
  /*@pos*/ int isOdd(int n) { return isEven(n - 1); }
  /*@pos*/ int ping(int n) { return pong(n - 1); }
  /*@pos*/ int pong(int n) { return ping(n - 1); }
  int isSmall(int n) { return check(n - 1); }
  int check(int n) { return verify(n - 1); }
  int verify(int n) { return n - 1; }
  int twice(int n) { return helper(n - 1); }
  int helper(int n) { return last(n - 1); }
  int last(int n) { return n - 1; }
}
