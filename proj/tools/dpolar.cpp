#include <cstdio>

int main() {
  std::puts("dpolar cli placeholder");
  return 0;
}
