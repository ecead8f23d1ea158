class Validator {
  public boolean checkRange(int row, int diag) {
    assert row >= 0 : "row must be non-negative";
    return row > diag;
  }
}
