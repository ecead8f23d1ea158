class Pawn {
  private final int column;

  Pawn(int column) {
    this.column = column;
  }

  @Override
  public boolean equals(Object o) {
    if (o == this) {
      return true;
    }
    if (!(o instanceof Pawn)) {
      return false;
    }
    return ((Pawn) o).column == column;
  }
}
