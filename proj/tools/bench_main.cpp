// Times the serial reference elimination against the OpenMP path on
// annihilator systems of growing size; both must produce identical bases.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "qlf/differential.hpp"

using namespace qlf;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

struct Instance {
    FieldPtr field;
    std::vector<DifferentialForm> wedges;
    int n;
};

Instance make_instance(std::size_t m, std::size_t pairs, int n, uint64_t seed) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < m; ++i) vars.push_back("t" + std::to_string(i + 1));
    auto field = make_field(2, vars);
    std::mt19937_64 rng(seed);
    auto rnd = [&](void) {
        Polynomial num = Polynomial::variable(field, rng() % m);
        num = num * Polynomial::variable(field, rng() % m) + Polynomial::constant(field, 1);
        Polynomial den = Polynomial::variable(field, rng() % m);
        return RationalFunction(num, den);
    };
    Instance inst{field, {}, n};
    for (std::size_t i = 0; i < pairs; ++i)
        inst.wedges.push_back(wedge(d_of_element(rnd()), d_of_element(rnd())));
    return inst;
}

} // namespace

int main() {
    std::cout << "ann_bruteforce: serial reference vs OpenMP row updates\n";
    std::cout << std::setw(26) << "instance" << std::setw(12) << "serial[s]" << std::setw(12)
              << "openmp[s]" << std::setw(10) << "speedup" << std::setw(8) << "equal\n";

    struct Shape {
        std::size_t m, pairs;
        int n;
    };
    for (const Shape& s : {Shape{6, 3, 2}, Shape{7, 4, 2}, Shape{8, 4, 3}}) {
        Instance inst = make_instance(s.m, s.pairs, s.n, 12345);

        auto t0 = std::chrono::steady_clock::now();
        SubspaceBasis serial = ann_bruteforce(inst.field, inst.wedges, inst.n, linalg::Mode::Serial);
        auto t1 = std::chrono::steady_clock::now();
        SubspaceBasis parallel =
            ann_bruteforce(inst.field, inst.wedges, inst.n, linalg::Mode::Parallel);
        auto t2 = std::chrono::steady_clock::now();

        double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::ostringstream name;
        name << "m=" << s.m << " |U|=" << s.pairs << " n=" << s.n;
        std::cout << std::setw(26) << name.str() << std::setw(12) << std::fixed
                  << std::setprecision(3) << ts << std::setw(12) << tp << std::setw(10)
                  << std::setprecision(2) << (tp > 0 ? ts / tp : 0.0) << std::setw(7)
                  << (subspace_equal(serial, parallel) ? "yes" : "NO") << "\n";
    }
    return 0;
}
