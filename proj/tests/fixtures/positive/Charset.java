import java.util.Arrays;

class Charset {
  public static boolean isWithinCharset(int charsetSize, int... symbols) {
    return symbols != null
        && Arrays.stream(symbols).allMatch(i -> i >= 0 && i < charsetSize);
  }
}
