import java.util.Iterator;
import java.util.NoSuchElementException;

public final class Range implements Iterator<Integer> {
  private int start;
  private final int end;

  public Range(int start, int end) {
    this.start = start;
    this.end = end;
  }

  @Override
  public boolean hasNext() {
    return contains(start);
  }

  @Override
  public Integer next() {
    if (!hasNext()) {
      throw new NoSuchElementException();
    }
    return start++;
  }

  private boolean contains(int value) {
    return value < end;
  }
}
