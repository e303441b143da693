class Config {
  /*@pos*/ public int port;
  /*@pos*/ public String host;
  private int retries;
  private String secret;
  int timeout;
}
