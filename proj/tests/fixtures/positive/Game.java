class Game {
  private int[] cells = new int[64];

  void absorb(Object copy) {
    if (copy instanceof Game gameCopy) {
      gameCopy.cells = cells.clone();
    }
  }
}
