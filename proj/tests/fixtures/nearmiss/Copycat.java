class Copycat {
  private int value;

  @Override
  public Copycat clone() {
    try {
      return (Copycat) super.clone();
    } catch (CloneNotSupportedException e) {
      throw new Error(e);
    }
  }
}
