/*
   Copyright 2026 The z4ucyclic authors

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

// Compares the serial reference kernels against the OpenMP ones on a
// mid-sized length-7 code: distance search over ~2M codewords and one
// annihilation sweep.  Usage: bench_distance [log2_size_cap]

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "z4u/duality.hpp"
#include "z4u/graymap.hpp"
#include "z4u/specformat.hpp"

using namespace z4u;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int cap = 21;
    if (argc > 1) cap = std::atoi(argv[1]);

#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP not available; both kernels run serially\n";
#endif

    auto sys = FactorSystem::build(7);
    // <u>, <u^3>, <u^3,2u^2>: 2^6 * 2^6 * 2^9 = 2^21 codewords
    CyclicCode code = assemble_code(sys, 4, parse_spec_list("u;u^3;(u^3,2u^2)", *sys, 4));
    if (code.log2_size() > cap)
        code = assemble_code(sys, 4, parse_spec_list("u^2;u^3;(u^3,2u^2)", *sys, 4));
    std::cout << "distance search over 2^" << code.log2_size() << " codewords (length 28)\n";

    auto t0 = Clock::now();
    auto serial = min_lee_distance_serial(code, 1ull << 22);
    double ts = seconds_since(t0);
    std::cout << "serial:   d = " << *serial << "  " << ts << " s\n";

    auto t1 = Clock::now();
    auto parallel = min_lee_distance(code, 1ull << 22);
    double tp = seconds_since(t1);
    std::cout << "parallel: d = " << *parallel << "  " << tp << " s  (speedup "
              << (tp > 0 ? ts / tp : 0.0) << "x)\n";

    if (serial != parallel) {
        std::cout << "KERNEL MISMATCH\n";
        return 1;
    }

    // annihilation sweep: exhaustive product over a dual pair of moderate size
    CyclicCode small = assemble_code(sys, 4, parse_spec_list("u^2;u^3;u^4", *sys, 4));
    CyclicCode dual = dual_code(small);
    auto t2 = Clock::now();
    bool ok_serial = verify_annihilation_serial(small, dual, 1ull << 24);
    double as = seconds_since(t2);
    auto t3 = Clock::now();
    bool ok_parallel = verify_annihilation(small, dual, 1ull << 24);
    double ap = seconds_since(t3);
    std::cout << "annihilation sweep (2^" << small.log2_size() + dual.log2_size()
              << " pairs budget-limited): serial " << as << " s, parallel " << ap
              << " s, verdicts " << ok_serial << "/" << ok_parallel << "\n";
    if (ok_serial != ok_parallel) {
        std::cout << "KERNEL MISMATCH\n";
        return 1;
    }
    return 0;
}
