#include <iostream>

int main() {
    std::cout << "qc: placeholder\n";
    return 0;
}
