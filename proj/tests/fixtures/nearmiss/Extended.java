class Base {
  @Override
  public boolean equals(Object o) {
    return o instanceof Base;
  }
}

class Extended extends Base {
  private int extra;

  int extra() {
    return extra;
  }
}
