import java.util.Iterator;
import java.util.NoSuchElementException;

class TaskQueue implements Iterator<String> {
  private final String[] tasks;
  private int next;

  TaskQueue(String[] tasks) {
    this.tasks = tasks.clone();
  }

  @Override
  public boolean hasNext() {
    return next < tasks.length;
  }

  @Override
  public String next() {
    if (!hasNext()) {
      throw new NoSuchElementException("queue drained");
    }
    return tasks[next++];
  }
}
