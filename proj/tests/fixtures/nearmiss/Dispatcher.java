class Dispatcher {
  int kind(char c) {
    switch (c) {
      case 'a':
        return 1;
      case 'b':
        return 2;
    }
    return 0;
  }
}
