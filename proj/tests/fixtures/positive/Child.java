class Ancestor {
  @Override
  public boolean equals(Object o) {
    return o instanceof Ancestor;
  }
}

class Child extends Ancestor {
  private int additionalField;

  @Override
  public boolean equals(Object o) {
    return o instanceof Child && ((Child) o).additionalField == additionalField;
  }
}
