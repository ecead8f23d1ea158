class Command implements Comparable<Command> {
  private final String name;

  Command(String name) {
    this.name = name;
  }

  @Override
  public int compareTo(Command command) {
    return name.compareTo(command.name);
  }

  @Override
  public boolean equals(Object o) {
    return o instanceof Command && name.equals(((Command) o).name);
  }
}
