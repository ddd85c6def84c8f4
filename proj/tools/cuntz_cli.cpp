#include "cuntz/cuntz.hpp"
int main() { return 0; }
