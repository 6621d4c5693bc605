// sparsum command-line front end. Subcommands are filled in alongside the
// library modules; see README for usage.

#include <cstdio>

int main() {
  std::puts("sparsum: not yet wired up");
  return 3;
}
