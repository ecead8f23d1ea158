final class Session {
  private static Session instance;
  private int requests;

  private Session() {
  }

  public static Session getInstance() {
    if (instance == null) {
      instance = new Session();
    }
    return instance;
  }

  void count() {
    requests++;
  }
}
