// Cohomology of Z/n with trivial integer coefficients from the periodic
// resolution ... -> ZG --N--> ZG --(t-1)--> ZG -> Z. Independent of the
// library: group ring arithmetic and the 1x1 Hom complex are done here.
//
//   group_cohomology_oracle              print the table
//   group_cohomology_oracle --check F    compare against fixture file F
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using GroupRingElem = std::vector<long>;  // coefficient of t^k at index k

GroupRingElem multiply(const GroupRingElem& a, const GroupRingElem& b) {
    const std::size_t n = a.size();
    GroupRingElem c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[(i + j) % n] += a[i] * b[j];
    return c;
}

// d_k(1) for the resolution: t - 1 in odd degrees, the norm element in even ones.
GroupRingElem differential(int n, int k) {
    GroupRingElem d(n, 0);
    if (k % 2 == 1) {
        d[1 % n] += 1;
        d[0] -= 1;
    } else {
        for (auto& x : d) x = 1;
    }
    return d;
}

// Hom_G(ZG, Z) = Z by evaluation at 1; with trivial action d^* is the augmentation.
long augmentation(const GroupRingElem& x) { return std::accumulate(x.begin(), x.end(), 0L); }

struct Invariant {
    long rank;
    std::vector<long> torsion;
};

std::vector<Invariant> cohomology(int n, int top) {
    for (int k = 1; k + 1 <= top + 1; ++k) {
        auto dd = multiply(differential(n, k), differential(n, k + 1));
        for (long c : dd)
            if (c != 0) {
                std::cerr << "resolution is not a complex at degree " << k << "\n";
                std::exit(2);
            }
    }
    // delta^k : Hom(P_k) -> Hom(P_{k+1}) is multiplication by the augmentation of d_{k+1}.
    std::vector<long> delta(top + 1);
    for (int k = 0; k <= top; ++k) delta[k] = augmentation(differential(n, k + 1));
    std::vector<Invariant> out;
    for (int k = 0; k <= top; ++k) {
        const bool cycle = delta[k] == 0;
        const long image = k == 0 ? 0 : std::labs(delta[k - 1]);
        if (!cycle) out.push_back({0, {}});
        else if (image == 0) out.push_back({1, {}});
        else if (image == 1) out.push_back({0, {}});
        else out.push_back({0, {image}});
    }
    return out;
}

std::string table() {
    std::ostringstream out;
    for (int n : {2, 3}) {
        auto h = cohomology(n, 4);
        for (int k = 0; k <= 4; ++k) {
            out << "z" << n << ' ' << k << ' ' << h[k].rank;
            for (long t : h[k].torsion) out << ' ' << t;
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string computed = table();
    if (argc == 3 && std::string(argv[1]) == "--check") {
        std::ifstream in(argv[2]);
        if (!in) {
            std::cerr << "cannot open " << argv[2] << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() != computed) {
            std::cerr << "fixture differs from the oracle\n--- fixture\n" << buf.str() << "--- oracle\n" << computed;
            return 1;
        }
        std::cout << "fixture matches the oracle\n";
        return 0;
    }
    std::cout << computed;
    return 0;
}
