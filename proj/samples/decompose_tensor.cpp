// Decompose M(l1,i1) (x) M(l2,i2) over H_{n,d} from the matrix model.
//
//   decompose_tensor [n d l1 i1 l2 i2]   (default: 6 3 2 0 3 1)

#include "taft/hmodule.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    int v[6] = {6, 3, 2, 0, 3, 1};
    if (argc == 7)
        for (int k = 0; k < 6; ++k) v[k] = std::atoi(argv[k + 1]);
    try {
        const taft::TaftParams p(v[0], v[1]);
        const auto a = taft::build_module(p, v[2], v[3]);
        const auto b = taft::build_module(p, v[4], v[5]);
        std::cout << taft::IndexPair(p, v[2], v[3]) << " (x) " << taft::IndexPair(p, v[4], v[5]) << " =";
        const char* sep = " ";
        for (const auto& part : taft::decompose(taft::tensor(a, b))) {
            std::cout << sep << part;
            sep = " + ";
        }
        std::cout << "\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
