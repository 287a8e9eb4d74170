// Benchmark: serial vs OpenMP-parallel Omega table fill. Rows within a
// column are independent, so the parallel fill splits each column across
// threads; this compares wall time and checks the results agree.

#include <omegalab/omega.hpp>

#include <chrono>
#include <iostream>
#include <string>

using namespace omegalab;
using Clock = std::chrono::steady_clock;

namespace {
double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}
}  // namespace

int main(int argc, char** argv) {
    unsigned long n_max = 1200;
    if (argc > 1) n_max = std::stoul(argv[1]);
    OmegaPoint<ExactInt> point{ExactInt(1), ExactInt(4)};

    std::cout << "n serial_s parallel_s speedup match\n";
    for (unsigned long n = n_max / 4; n <= n_max; n += n_max / 4) {
        auto t0 = Clock::now();
        OmegaTable<ExactInt> serial(point, n, FillMode::serial, n);
        double ts = seconds_since(t0);

        t0 = Clock::now();
        OmegaTable<ExactInt> parallel(point, n, FillMode::parallel, n);
        double tp = seconds_since(t0);

        bool match = true;
        for (unsigned long k = 0; k <= serial.half() && match; ++k)
            for (unsigned long r = 0; r + k <= serial.half(); ++r)
                if (serial.at(r, k) != parallel.at(r, k)) {
                    match = false;
                    break;
                }

        std::cout << n << " " << ts << " " << tp << " " << (tp > 0 ? ts / tp : 0.0) << " "
                  << (match ? "yes" : "NO") << "\n";
        if (!match) return 1;
    }
    return 0;
}
