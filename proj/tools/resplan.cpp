#include <iostream>

int main() {
  std::cerr << "cli not wired up yet\n";
  return 1;
}
