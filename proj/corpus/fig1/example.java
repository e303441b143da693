/*@pos*/ public CacheConfig foo(Log4jUtils utils) {}
public CacheConfig f2(int size) {}
public int f3(Log4jUtils u) {}
