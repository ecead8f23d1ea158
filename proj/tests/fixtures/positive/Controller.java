final class Controller {
  private static Controller instance;
  private int ticks;

  private Controller() {
  }

  public static Controller getInstance() {
    return instance;
  }

  void ping() {
    ticks++;
  }
}
