class Score implements Comparable<Score> {
  private final int points;

  Score(int points) {
    this.points = points;
  }

  @Override
  public int compareTo(Score other) {
    return Integer.compare(points, other.points);
  }
}
