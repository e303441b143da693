class Files {
  /*@pos*/ void open(String p) { File f = new File(p); }
  /*@pos*/ void touch() { new File("a.txt"); }
  void list() { List l = new ArrayList(); }
  int count(int n) { return n + 1; }
}
