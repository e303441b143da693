class Service {
  /*@pos*/ public CacheConfig foo(Log4jUtils utils) { return null; }
  /*@pos*/ void bar(int size, Log4jUtils log) {}
  int baz(int size) { return size; }
  void qux() {}
  String name(String n) { return n; }
}
