#include "catcoh/simplicial.hpp"

#include <algorithm>

namespace catcoh {

// ------------------------------------------------------------ monotone maps

bool MonotoneMap::valid() const {
    if (values.empty() || target < 0) return false;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > target) return false;
        if (i > 0 && values[i] < values[i - 1]) return false;
    }
    return true;
}

bool MonotoneMap::is_identity() const {
    if (source() != target) return false;
    for (int i = 0; i <= target; ++i)
        if (values[i] != i) return false;
    return true;
}

bool MonotoneMap::injective() const {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] == values[i - 1]) return false;
    return true;
}

bool MonotoneMap::surjective() const {
    if (values.front() != 0 || values.back() != target) return false;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[i - 1] + 1) return false;
    return true;
}

MonotoneMap MonotoneMap::identity(int n) {
    MonotoneMap f{n, {}};
    for (int i = 0; i <= n; ++i) f.values.push_back(i);
    return f;
}

MonotoneMap MonotoneMap::coface(int n, int i) {
    MonotoneMap f{n, {}};
    for (int j = 0; j <= n; ++j)
        if (j != i) f.values.push_back(j);
    return f;
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
    MonotoneMap f{n, {}};
    for (int j = 0; j <= n + 1; ++j) f.values.push_back(j <= i ? j : j - 1);
    return f;
}

std::vector<MonotoneMap> MonotoneMap::all(int m, int n) {
    std::vector<MonotoneMap> out;
    MonotoneMap f{n, std::vector<int>(m + 1, 0)};
    while (true) {
        out.push_back(f);
        int k = m;
        while (k >= 0 && f.values[k] == n) --k;
        if (k < 0) break;
        int v = f.values[k] + 1;
        for (int j = k; j <= m; ++j) f.values[j] = v;
    }
    return out;
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
    if (g.target != f.source()) throw std::invalid_argument("monotone maps not composable");
    MonotoneMap h{f.target, {}};
    for (int v : g.values) h.values.push_back(f.values[v]);
    return h;
}

// ------------------------------------------------------------------ tables

SimplexTable::SimplexTable(int width, std::vector<int> data) : width_(width), data_(std::move(data)) {
    for (std::size_t i = 1; i < size(); ++i) {
        auto a = row(i - 1), b = row(i);
        if (!std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()))
            throw std::logic_error("simplex enumeration not strictly increasing");
    }
}

std::optional<std::size_t> SimplexTable::find(const Simplex& x) const {
    if (static_cast<int>(x.size()) != width_) return std::nullopt;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto r = row(mid);
        if (std::lexicographical_compare(r.begin(), r.end(), x.begin(), x.end())) lo = mid + 1;
        else hi = mid;
    }
    if (lo < size() && std::equal(x.begin(), x.end(), row(lo).begin())) return lo;
    return std::nullopt;
}

void Emitter::push(std::span<const int> code) {
    if (static_cast<int>(code.size()) != width_) throw std::logic_error("simplex code of wrong width");
    if (++count_ > limit_) throw CapExceeded("simplex cap exceeded while enumerating " + what_);
    out_.insert(out_.end(), code.begin(), code.end());
}

void Emitter::push2(std::span<const int> a, std::span<const int> b) {
    if (static_cast<int>(a.size() + b.size()) != width_) throw std::logic_error("simplex code of wrong width");
    if (++count_ > limit_) throw CapExceeded("simplex cap exceeded while enumerating " + what_);
    out_.insert(out_.end(), a.begin(), a.end());
    out_.insert(out_.end(), b.begin(), b.end());
}

namespace {

// f^* by faces d_j (j outside the image, descending) then degeneracies s_j
// (ascending j with f(j) = f(j+1)).
template <class Face, class Degen>
Simplex factor_apply(const MonotoneMap& f, Simplex x, Face face, Degen degen) {
    if (!f.valid()) throw std::invalid_argument("invalid monotone map");
    int deg = f.target;
    std::vector<bool> hit(f.target + 1, false);
    for (int v : f.values) hit[v] = true;
    for (int j = f.target; j >= 0; --j)
        if (!hit[j]) x = face(deg--, j, x);
    for (int j = 0; j < f.source(); ++j)
        if (f.values[j] == f.values[j + 1]) x = degen(deg++, j, x);
    return x;
}

std::string cap_text(std::size_t limit) { return " (cap " + std::to_string(limit) + ", set CATCOH_SIMPLEX_CAP)"; }

}  // namespace

Simplex SimplicialSet::apply_by_factoring(const MonotoneMap& f, const Simplex& x) const {
    return factor_apply(
        f, x, [&](int n, int i, const Simplex& y) { return face(n, i, y); },
        [&](int n, int i, const Simplex& y) { return degeneracy(n, i, y); });
}

const SimplexTable& SimplicialSet::simplices(int n) const {
    if (n < 0) throw std::out_of_range("negative simplicial degree");
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;
    std::vector<int> flat;
    std::size_t remaining = cap_.limit > total_ ? cap_.limit - total_ : 0;
    Emitter out(flat, width(n), remaining, description() + " in degree " + std::to_string(n) + cap_text(cap_.limit));
    enumerate(n, out);
    auto table = std::make_unique<SimplexTable>(width(n), std::move(flat));
    total_ += table->size();
    return *cache_.emplace(n, std::move(table)).first->second;
}

std::size_t SimplicialSet::index_of(int n, const Simplex& x) const {
    auto i = simplices(n).find(x);
    if (!i) throw std::out_of_range(description() + ": not a simplex of degree " + std::to_string(n));
    return *i;
}

// ------------------------------------------------------------------- nerve

Nerve::Nerve(CategoryPtr C, SimplexCap cap) : SimplicialSet(cap), C_(std::move(C)) {}

ObjId Nerve::vertex(int n, const Simplex& x, int i) const {
    if (n == 0) return x.at(0);
    return i == 0 ? C_->src(x.at(0)) : C_->dst(x.at(i - 1));
}

MorId Nerve::composite(int n, const Simplex& x, int from, int to) const {
    MorId m = C_->identity(vertex(n, x, from));
    for (int k = from; k < to; ++k) m = C_->compose(x.at(k), m);
    return m;
}

Simplex Nerve::face(int n, int i, const Simplex& x) const {
    if (n < 1 || i < 0 || i > n) throw std::out_of_range("nerve face index out of range");
    if (n == 1) return {i == 0 ? C_->dst(x[0]) : C_->src(x[0])};
    Simplex y;
    y.reserve(n - 1);
    if (i == 0) return {x.begin() + 1, x.end()};
    if (i == n) return {x.begin(), x.end() - 1};
    y.insert(y.end(), x.begin(), x.begin() + (i - 1));
    y.push_back(C_->compose(x[i], x[i - 1]));
    y.insert(y.end(), x.begin() + (i + 1), x.end());
    return y;
}

Simplex Nerve::degeneracy(int n, int i, const Simplex& x) const {
    if (i < 0 || i > n) throw std::out_of_range("nerve degeneracy index out of range");
    if (n == 0) return {C_->identity(x[0])};
    Simplex y(x);
    y.insert(y.begin() + i, C_->identity(vertex(n, x, i)));
    return y;
}

Simplex Nerve::apply(const MonotoneMap& f, const Simplex& x) const {
    if (!f.valid()) throw std::invalid_argument("invalid monotone map");
    const int n = f.target;
    const int m = f.source();
    if (m == 0) return {vertex(n, x, f(0))};
    Simplex y(m);
    for (int k = 0; k < m; ++k) y[k] = composite(n, x, f(k), f(k + 1));
    return y;
}

void Nerve::enumerate(int n, Emitter& out) const {
    const auto& C = *C_;
    if (n == 0) {
        for (ObjId x = 0; x < C.object_count(); ++x) out.push(Simplex{x});
        return;
    }
    std::vector<std::vector<MorId>> outgoing(C.object_count());
    for (MorId m = 0; m < C.morphism_count(); ++m) outgoing[C.src(m)].push_back(m);
    Simplex chain(n);
    // iterative depth-first search in increasing id order
    std::vector<std::size_t> pos(n, 0);
    int k = 0;
    while (k >= 0) {
        const std::vector<MorId>* choices = nullptr;
        if (k == 0) {
            if (pos[0] >= static_cast<std::size_t>(C.morphism_count())) {
                --k;
                continue;
            }
            chain[0] = static_cast<MorId>(pos[0]++);
        } else {
            choices = &outgoing[C.dst(chain[k - 1])];
            if (pos[k] >= choices->size()) {
                --k;
                continue;
            }
            chain[k] = (*choices)[pos[k]++];
        }
        if (k == n - 1) {
            out.push(chain);
        } else {
            ++k;
            pos[k] = 0;
        }
    }
}

Simplex functor_on_simplex(const Functor& F, int n, const Simplex& x) {
    if (n == 0) return {F.obj(x.at(0))};
    Simplex y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = F.mor(x[k]);
    return y;
}

// ----------------------------------------------------------- bisimplicial

Simplex BisimplicialSet::apply_by_factoring(const MonotoneMap& fh, const MonotoneMap& fv, const Simplex& x) const {
    const int q = fv.target;
    Simplex y = factor_apply(
        fh, x, [&](int p, int i, const Simplex& s) { return hface(p, q, i, s); },
        [&](int p, int i, const Simplex& s) { return hdegeneracy(p, q, i, s); });
    const int p = fh.source();
    return factor_apply(
        fv, y, [&](int qq, int i, const Simplex& s) { return vface(p, qq, i, s); },
        [&](int qq, int i, const Simplex& s) { return vdegeneracy(p, qq, i, s); });
}

const SimplexTable& BisimplicialSet::simplices(int p, int q) const {
    if (p < 0 || q < 0) throw std::out_of_range("negative bisimplicial degree");
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find({p, q});
    if (it != cache_.end()) return *it->second;
    std::vector<int> flat;
    std::size_t remaining = cap_.limit > total_ ? cap_.limit - total_ : 0;
    Emitter out(flat, width(p, q), remaining,
                description() + " in bidegree (" + std::to_string(p) + "," + std::to_string(q) + ")" + cap_text(cap_.limit));
    enumerate(p, q, out);
    auto table = std::make_unique<SimplexTable>(width(p, q), std::move(flat));
    total_ += table->size();
    return *cache_.emplace(std::make_pair(p, q), std::move(table)).first->second;
}

std::size_t BisimplicialSet::index_of(int p, int q, const Simplex& x) const {
    auto i = simplices(p, q).find(x);
    if (!i)
        throw std::out_of_range(description() + ": not a simplex of bidegree (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
    return *i;
}

// ------------------------------------------------------------ replacement

SimplicialReplacement::SimplicialReplacement(FunctorToCatPtr G, SimplexCap cap)
    : BisimplicialSet(cap), G_(std::move(G)) {
    base_ = std::make_shared<Nerve>(G_->base, cap);
    for (const auto& fiber : G_->fibers) fibers_.push_back(std::make_shared<Nerve>(fiber, cap));
}

Simplex SimplicialReplacement::join(const Simplex& sigma, const Simplex& tau) {
    Simplex x(sigma);
    x.insert(x.end(), tau.begin(), tau.end());
    return x;
}

Simplex SimplicialReplacement::hface(int p, int q, int i, const Simplex& x) const {
    Simplex s = sigma(p, x);
    Simplex t = tau(p, x);
    if (i == 0) t = functor_on_simplex(G_->act(s.at(0)), q, t);
    return join(base_->face(p, i, s), t);
}

Simplex SimplicialReplacement::vface(int p, int q, int i, const Simplex& x) const {
    Simplex s = sigma(p, x);
    return join(s, fibers_.at(anchor(p, x))->face(q, i, tau(p, x)));
}

Simplex SimplicialReplacement::hdegeneracy(int p, int, int i, const Simplex& x) const {
    return join(base_->degeneracy(p, i, sigma(p, x)), tau(p, x));
}

Simplex SimplicialReplacement::vdegeneracy(int p, int q, int i, const Simplex& x) const {
    return join(sigma(p, x), fibers_.at(anchor(p, x))->degeneracy(q, i, tau(p, x)));
}

Simplex SimplicialReplacement::apply(const MonotoneMap& fh, const MonotoneMap& fv, const Simplex& x) const {
    const int p = fh.target;
    Simplex s = sigma(p, x);
    ObjId d0 = base_->vertex(p, s, 0);
    MorId a = base_->composite(p, s, 0, fh(0));
    Simplex t = fibers_.at(d0)->apply(fv, tau(p, x));
    return join(base_->apply(fh, s), functor_on_simplex(G_->act(a), fv.source(), t));
}

void SimplicialReplacement::enumerate(int p, int q, Emitter& out) const {
    const auto& sig = base_->simplices(p);
    for (std::size_t i = 0; i < sig.size(); ++i) {
        auto s = sig.row(i);
        ObjId d0 = p == 0 ? s[0] : G_->base->src(s[0]);
        const auto& taus = fibers_.at(d0)->simplices(q);
        for (std::size_t j = 0; j < taus.size(); ++j) out.push2(s, taus.row(j));
    }
}

// -------------------------------------------------------- diagonal, constant

Diagonal::Diagonal(BisimplicialSetPtr X) : SimplicialSet(X->cap()), X_(std::move(X)) {}

Simplex Diagonal::face(int n, int i, const Simplex& x) const {
    return X_->vface(n - 1, n, i, X_->hface(n, n, i, x));
}

Simplex Diagonal::degeneracy(int n, int i, const Simplex& x) const {
    return X_->vdegeneracy(n + 1, n, i, X_->hdegeneracy(n, n, i, x));
}

void Diagonal::enumerate(int n, Emitter& out) const {
    const auto& t = X_->simplices(n, n);
    for (std::size_t i = 0; i < t.size(); ++i) out.push(t.row(i));
}

HorizontallyConstant::HorizontallyConstant(SimplicialSetPtr Y) : BisimplicialSet(Y->cap()), Y_(std::move(Y)) {}

void HorizontallyConstant::enumerate(int, int q, Emitter& out) const {
    const auto& t = Y_->simplices(q);
    for (std::size_t i = 0; i < t.size(); ++i) out.push(t.row(i));
}

// ------------------------------------------------------------ identity checks

namespace {

std::string show(const Simplex& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + "]";
}

// Simplicial identities for one simplicial direction given face/degeneracy callbacks.
template <class Face, class Degen, class Member>
void check_direction(ValidationReport& report, const std::string& tag, int n, int bound, const Simplex& x, Face d,
                     Degen s, Member member) {
    const std::string at = tag + " degree " + std::to_string(n) + " simplex " + show(x);
    for (int i = 0; i <= n && n >= 1; ++i)
        if (!member(n - 1, d(n, i, x))) report.add(at + ": d_" + std::to_string(i) + " leaves the set");
    for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i)
            if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)))
                report.add(at + ": d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" +
                           std::to_string(j - 1) + " d_" + std::to_string(i));
    if (n + 1 > bound) return;
    for (int j = 0; j <= n; ++j) {
        Simplex sj = s(n, j, x);
        if (!member(n + 1, sj)) report.add(at + ": s_" + std::to_string(j) + " leaves the set");
        for (int i = 0; i <= j; ++i)
            if (s(n + 1, i, sj) != s(n + 1, j + 1, s(n, i, x)))
                report.add(at + ": s_" + std::to_string(i) + " s_" + std::to_string(j) + " != s_" +
                           std::to_string(j + 1) + " s_" + std::to_string(i));
        for (int i = 0; i <= n + 1; ++i) {
            Simplex lhs = d(n + 1, i, sj);
            bool ok;
            if (i < j) ok = lhs == s(n - 1, j - 1, d(n, i, x));
            else if (i == j || i == j + 1) ok = lhs == x;
            else ok = lhs == s(n - 1, j, d(n, i - 1, x));
            if (!ok) report.add(at + ": d_" + std::to_string(i) + " s_" + std::to_string(j) + " identity fails");
        }
    }
}

}  // namespace

ValidationReport check_simplicial_identities(const SimplicialSet& X, int bound) {
    ValidationReport report;
    auto d = [&](int n, int i, const Simplex& x) { return X.face(n, i, x); };
    auto s = [&](int n, int i, const Simplex& x) { return X.degeneracy(n, i, x); };
    auto member = [&](int n, const Simplex& x) { return X.simplices(n).find(x).has_value(); };
    for (int n = 0; n <= bound; ++n) {
        const auto& t = X.simplices(n);
        for (std::size_t k = 0; k < t.size(); ++k) check_direction(report, X.description(), n, bound, t.at(k), d, s, member);
    }
    return report;
}

ValidationReport check_bisimplicial_identities(const BisimplicialSet& X, int bound) {
    ValidationReport report;
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; p + q <= bound; ++q) {
            const auto& t = X.simplices(p, q);
            for (std::size_t k = 0; k < t.size(); ++k) {
                Simplex x = t.at(k);
                const std::string tag = X.description() + " (" + std::to_string(p) + "," + std::to_string(q) + ")";
                check_direction(
                    report, tag + " horizontal", p, bound - q, x,
                    [&](int n, int i, const Simplex& y) { return X.hface(n, q, i, y); },
                    [&](int n, int i, const Simplex& y) { return X.hdegeneracy(n, q, i, y); },
                    [&](int n, const Simplex& y) { return X.simplices(n, q).find(y).has_value(); });
                check_direction(
                    report, tag + " vertical", q, bound - p, x,
                    [&](int n, int i, const Simplex& y) { return X.vface(p, n, i, y); },
                    [&](int n, int i, const Simplex& y) { return X.vdegeneracy(p, n, i, y); },
                    [&](int n, const Simplex& y) { return X.simplices(p, n).find(y).has_value(); });
                // horizontal and vertical operators commute
                for (int i = 0; i <= p && p >= 1; ++i)
                    for (int j = 0; j <= q && q >= 1; ++j)
                        if (X.hface(p, q - 1, i, X.vface(p, q, j, x)) != X.vface(p - 1, q, j, X.hface(p, q, i, x)))
                            report.add(tag + " simplex " + show(x) + ": hface/vface do not commute");
                for (int i = 0; i <= p; ++i)
                    for (int j = 0; j <= q; ++j)
                        if (X.hdegeneracy(p, q + 1, i, X.vdegeneracy(p, q, j, x)) !=
                            X.vdegeneracy(p + 1, q, j, X.hdegeneracy(p, q, i, x)))
                            report.add(tag + " simplex " + show(x) + ": hdegeneracy/vdegeneracy do not commute");
                for (int i = 0; i <= p && p >= 1; ++i)
                    for (int j = 0; j <= q; ++j)
                        if (X.hface(p, q + 1, i, X.vdegeneracy(p, q, j, x)) !=
                            X.vdegeneracy(p - 1, q, j, X.hface(p, q, i, x)))
                            report.add(tag + " simplex " + show(x) + ": hface/vdegeneracy do not commute");
                for (int i = 0; i <= p; ++i)
                    for (int j = 0; j <= q && q >= 1; ++j)
                        if (X.vface(p + 1, q, j, X.hdegeneracy(p, q, i, x)) !=
                            X.hdegeneracy(p, q - 1, i, X.vface(p, q, j, x)))
                            report.add(tag + " simplex " + show(x) + ": vface/hdegeneracy do not commute");
            }
        }
    return report;
}

ValidationReport check_apply_consistency(const SimplicialSet& X, int bound) {
    ValidationReport report;
    for (int n = 0; n <= bound; ++n) {
        const auto& t = X.simplices(n);
        for (int m = 0; m <= bound; ++m)
            for (const auto& f : MonotoneMap::all(m, n))
                for (std::size_t k = 0; k < t.size(); ++k) {
                    Simplex x = t.at(k);
                    if (X.apply(f, x) != X.apply_by_factoring(f, x))
                        report.add(X.description() + ": f^* disagrees with factoring on " + show(x) + " f=" + show(f.values));
                }
    }
    return report;
}

ValidationReport check_apply_consistency(const BisimplicialSet& X, int bound) {
    ValidationReport report;
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; p + q <= bound; ++q) {
            const auto& t = X.simplices(p, q);
            for (int mp = 0; mp <= bound; ++mp)
                for (int mq = 0; mp + mq <= bound; ++mq)
                    for (const auto& fh : MonotoneMap::all(mp, p))
                        for (const auto& fv : MonotoneMap::all(mq, q))
                            for (std::size_t k = 0; k < t.size(); ++k) {
                                Simplex x = t.at(k);
                                if (X.apply(fh, fv, x) != X.apply_by_factoring(fh, fv, x))
                                    report.add(X.description() + ": (fh x fv)^* disagrees with factoring on " + show(x));
                            }
        }
    return report;
}

}  // namespace catcoh
