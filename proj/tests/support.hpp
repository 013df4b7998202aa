#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace testsup {

// Deterministic splitmix64 generator so property tests are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    // Uniform in [lo, hi).
    double uniform(double lo, double hi);
    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi);

private:
    std::uint64_t state_;
};

// Fresh unique directory under the system temp root.
std::string temp_dir();

void write_pgm_p5(const std::string& path, int w, int h,
                  const std::vector<std::uint8_t>& pixels, int maxval = 255);
void write_pgm_p2(const std::string& path, int w, int h,
                  const std::vector<std::uint8_t>& pixels, int maxval = 255);

// Smooth synthetic terrain: a handful of Gaussian hills over a flat base,
// kept clear of the border.
std::vector<std::uint8_t> hill_field(int w, int h);

std::string read_file(const std::string& path);
bool file_exists(const std::string& path);

} // namespace testsup
