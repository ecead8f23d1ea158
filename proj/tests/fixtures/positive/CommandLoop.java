class CommandLoop {
  void dispatch(char firstLetter, String token) {
    switch (firstLetter) {
      case 'h':
        cmdHelp(token);
        break;
      case 'q':
        cmdQuit(token);
        break;
      default:
        printError("Invalid Command!");
        break;
    }
  }

  private void cmdHelp(String token) {
    System.out.println("help " + token);
  }

  private void cmdQuit(String token) {
    System.out.println("quit " + token);
  }

  private void printError(String message) {
    System.out.println(message);
  }
}
