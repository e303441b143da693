/*@pos*/ class Cache { Log4jUtils log; int size; }
/*@pos*/ class Store { Log4jUtils logger; }
class Plain { int size; }
class Named { String name; }
class Empty { }
