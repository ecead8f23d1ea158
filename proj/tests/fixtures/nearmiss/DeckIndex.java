import java.util.HashMap;
import java.util.Map;

enum Suit {
  HEARTS, SPADES
}

class DeckIndex {
  private final Map<Suit, Integer> counts = new HashMap<>();
}
