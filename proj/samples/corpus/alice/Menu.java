class Menu {
  void handle(char key, String arg) {
    switch (key) {
      case 'n':
        create(arg);
        break;
      case 'd':
        remove(arg);
        break;
      default:
        System.out.println("unknown command");
        break;
    }
  }

  public void create(String name) {
    if (name == null) {
      throw new IllegalArgumentException("name is null");
    }
    System.out.println("created " + name);
  }

  private void remove(String name) {
    System.out.println("removed " + name);
  }
}
