#include "support.hpp"

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace testsup {

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

int Rng::uniform_int(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

std::string temp_dir() {
    static std::atomic<int> counter{0};
    auto dir = std::filesystem::temp_directory_path() /
               ("orthoview-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir.string();
}

namespace {

void write_pgm(const std::string& path, const char* magic, int w, int h,
               const std::vector<std::uint8_t>& pixels, int maxval, bool ascii) {
    if (pixels.size() != static_cast<size_t>(w) * h)
        throw std::runtime_error("pixel buffer size mismatch");
    std::ofstream out(path, std::ios::binary);
    out << magic << "\n" << w << " " << h << "\n" << maxval << "\n";
    if (ascii) {
        for (size_t k = 0; k < pixels.size(); ++k)
            out << static_cast<int>(pixels[k]) << ((k + 1) % 12 == 0 ? "\n" : " ");
        out << "\n";
    } else {
        out.write(reinterpret_cast<const char*>(pixels.data()),
                  static_cast<std::streamsize>(pixels.size()));
    }
    if (!out) throw std::runtime_error("cannot write " + path);
}

} // namespace

void write_pgm_p5(const std::string& path, int w, int h,
                  const std::vector<std::uint8_t>& pixels, int maxval) {
    write_pgm(path, "P5", w, h, pixels, maxval, false);
}

void write_pgm_p2(const std::string& path, int w, int h,
                  const std::vector<std::uint8_t>& pixels, int maxval) {
    write_pgm(path, "P2", w, h, pixels, maxval, true);
}

std::vector<std::uint8_t> hill_field(int w, int h) {
    struct Hill {
        double cx, cy, sigma, amp;
    };
    const Hill hills[] = {
        {0.35 * w, 0.40 * h, 0.11 * w, 120.0},
        {0.65 * w, 0.30 * h, 0.09 * w, 90.0},
        {0.50 * w, 0.70 * h, 0.13 * w, 110.0},
        {0.25 * w, 0.75 * h, 0.07 * w, 70.0},
    };
    std::vector<std::uint8_t> px(static_cast<size_t>(w) * h);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double v = 40.0;
            for (const Hill& hill : hills) {
                double dx = c - hill.cx, dy = r - hill.cy;
                v += hill.amp *
                     std::exp(-(dx * dx + dy * dy) / (2.0 * hill.sigma * hill.sigma));
            }
            v = std::min(255.0, std::max(0.0, v));
            px[static_cast<size_t>(r) * w + c] = static_cast<std::uint8_t>(std::lround(v));
        }
    }
    return px;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool file_exists(const std::string& path) {
    return std::filesystem::exists(path);
}

} // namespace testsup
