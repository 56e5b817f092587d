#include <iostream>

int main() {
    std::cout << "qexthh: placeholder\n";
    return 0;
}
