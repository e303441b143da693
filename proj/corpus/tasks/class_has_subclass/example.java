/*@pos*/ class Shape { int id; }
class Circle extends Shape { double r; }
/*@pos*/ class Animal { int legs; }
/*@pos*/ class Dog extends Animal { int tail; }
class Puppy extends Dog { int age; }
class Rock { int mass; }
class Failure extends Exception { int code; }
