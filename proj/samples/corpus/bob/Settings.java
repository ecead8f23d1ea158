class Settings {
  private final int width;
  private final int height;

  Settings(int width, int height) {
    this.width = width;
    this.height = height;
  }

  Settings(Settings original) {
    width = original.width;
    height = original.height;
  }

  @Override
  public boolean equals(Object o) {
    if (o == this) {
      return true;
    }
    if (!(o instanceof Settings)) {
      return false;
    }
    Settings other = (Settings) o;
    return other.width == width && other.height == height;
  }

  @Override
  public int hashCode() {
    return 31 * width + height;
  }
}
