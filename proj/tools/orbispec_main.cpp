#include <cstdio>

int main() {
    std::puts("orbispec: subcommands pending");
    return 0;
}
