import org.junit.jupiter.api.Test;

import static org.junit.jupiter.api.Assertions.assertThrows;

public class ChainedCallTest {
  @Test
  public void chained() {
    assertThrows(IllegalStateException.class, () -> builder().fire());
  }

  private ChainedCallTest builder() {
    return this;
  }

  private void fire() {
    throw new IllegalStateException("two calls");
  }
}
