// Compares the serial normalizer scan against the chunked kernel on the two
// largest desk-scale cases and verifies that every run returns the identical
// element list. Exits nonzero on any disagreement, so it can double as a
// stress check.
#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "wreath/finite_group.hpp"
#include "wreath/oracle.hpp"
#include "wreath/wreath_tower.hpp"

using namespace wreath;

namespace {

void print_row(const std::string& name, const std::string& workers, double seconds,
               double speedup, const BigInt& order) {
    std::cout << std::left << std::setw(14) << name << std::setw(10) << workers << std::right
              << std::setw(10) << std::fixed << std::setprecision(3) << seconds << std::setw(10)
              << std::setprecision(2) << speedup << std::setw(10) << order << "\n";
}

}  // namespace

int main() {
    struct Case {
        std::string name;
        std::string spec;
        int level;
    };
    const Case cases[] = {
        {"tower 2^3", "cyclic:2", 3},
        {"tower 3^2", "cyclic:3", 2},
    };

    std::vector<int> worker_counts = {1, 2, 4};
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0) worker_counts.push_back(static_cast<int>(hw));
    std::sort(worker_counts.begin(), worker_counts.end());
    worker_counts.erase(std::unique(worker_counts.begin(), worker_counts.end()),
                        worker_counts.end());

    std::cout << std::left << std::setw(14) << "case" << std::setw(10) << "workers" << std::right
              << std::setw(10) << "seconds" << std::setw(10) << "speedup" << std::setw(10)
              << "order" << "\n";

    bool ok = true;
    for (const Case& c : cases) {
        const WreathTower tower = WreathTower::build(group_from_spec(c.spec), c.level);
        const OracleResult serial =
            brute_force_normalizer_serial(tower.top_gens(), tower.degree());
        print_row(c.name, "serial", serial.elapsed_seconds, 1.0, serial.normalizer_order);

        for (int w : worker_counts) {
            const OracleResult parallel =
                brute_force_normalizer(tower.top_gens(), tower.degree(), w);
            const bool same = parallel.elements == serial.elements &&
                              parallel.normalizer_order == serial.normalizer_order;
            if (!same) {
                ok = false;
                std::cerr << c.name << ": result with " << w
                          << " workers differs from the serial reference\n";
            }
            const double speedup = parallel.elapsed_seconds > 0.0
                                       ? serial.elapsed_seconds / parallel.elapsed_seconds
                                       : 0.0;
            print_row(c.name, std::to_string(w), parallel.elapsed_seconds, speedup,
                      parallel.normalizer_order);
        }
    }

    if (!ok) {
        std::cerr << "mismatch between serial and chunked scans\n";
        return 1;
    }
    return 0;
}
