class Inspector {
  boolean isGame(Object copy) {
    return copy instanceof Inspector;
  }
}
