#include "lrdip.h"
#include <cstdio>
int main() { std::puts(lrdip_version()); return 0; }
