// Regenerates the bundled JSON corpus from the in-code builders.
#include <filesystem>
#include <iostream>

#include "leibrack/corpus.hpp"
#include "leibrack/interchange.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: write_corpus DIR\n";
        return 2;
    }
    std::filesystem::path dir(argv[1]);
    std::filesystem::create_directories(dir);
    for (const auto& alg : leibrack::corpus::all()) {
        auto path = dir / (leibrack::corpus::file_stem(alg) + ".json");
        leibrack::save_algebra(alg, path);
        std::cout << path.string() << "\n";
    }
}
