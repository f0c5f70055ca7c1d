/*
   Copyright 2026 The cyclofam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Compares the serial reference sweep against the OpenMP sweep for the two
// parallel kernels (family search and bound audit) and checks that both
// produce identical results.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclofam/bounds.hpp"
#include "cyclofam/render.hpp"
#include "cyclofam/search.hpp"

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t search_k_max = 48;
    std::uint64_t audit_k_max = 200;
    if (argc > 1) search_k_max = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) audit_k_max = std::strtoull(argv[2], nullptr, 10);

#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads = " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP not available; both runs are serial\n";
#endif

    using cyclofam::SearchOptions;

    std::cout << "search --k-max " << search_k_max << "\n";
    auto t0 = std::chrono::steady_clock::now();
    SearchOptions serial;
    serial.threads = 1;
    const auto serial_records = cyclofam::search_range(search_k_max, serial);
    const double search_serial = seconds_since(t0);
    std::cout << "  serial reference: " << search_serial << " s\n";

    t0 = std::chrono::steady_clock::now();
    const auto parallel_records = cyclofam::search_range(search_k_max, SearchOptions{});
    const double search_parallel = seconds_since(t0);
    std::cout << "  OpenMP sweep:     " << search_parallel << " s  (speedup "
              << search_serial / search_parallel << "x)\n";

    if (cyclofam::render_search_csv(serial_records) !=
        cyclofam::render_search_csv(parallel_records)) {
        std::cout << "  MISMATCH between serial and parallel records\n";
        return 1;
    }
    std::cout << "  records identical: yes\n";

    std::cout << "bounds audit, k <= " << audit_k_max << "\n";
    t0 = std::chrono::steady_clock::now();
    const auto serial_lines = cyclofam::audit_range(audit_k_max, 1);
    const double audit_serial = seconds_since(t0);
    std::cout << "  serial reference: " << audit_serial << " s\n";

    t0 = std::chrono::steady_clock::now();
    const auto parallel_lines = cyclofam::audit_range(audit_k_max, 0);
    const double audit_parallel = seconds_since(t0);
    std::cout << "  OpenMP sweep:     " << audit_parallel << " s  (speedup "
              << audit_serial / audit_parallel << "x)\n";

    bool same = serial_lines.size() == parallel_lines.size();
    for (std::size_t i = 0; same && i < serial_lines.size(); ++i)
        same = cyclofam::render_bounds_line(serial_lines[i]) ==
               cyclofam::render_bounds_line(parallel_lines[i]);
    std::cout << "  records identical: " << (same ? "yes" : "NO") << "\n";
    return same ? 0 : 1;
}
