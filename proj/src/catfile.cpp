#include "catcoh/catfile.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace catcoh {

namespace {

struct Tok {
    std::string text;
    int col;
};

struct Line {
    int number;
    std::vector<Tok> toks;

    const std::string& word(std::size_t i) const { return toks.at(i).text; }
    [[noreturn]] void fail(std::size_t tok, const std::string& message) const {
        int col = tok < toks.size() ? toks[tok].col : (toks.empty() ? 1 : toks.back().col);
        throw ParseError(number, col, message);
    }
    void arity(std::size_t n) const {
        if (toks.size() != n)
            fail(toks.size() < n ? toks.size() : n,
                 "'" + word(0) + "' expects " + std::to_string(n - 1) + " argument(s), got " +
                     std::to_string(toks.size() - 1));
    }
};

// '#' starts a comment; ':' and ';' are standalone tokens.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            char c = raw[i];
            if (c == '#') break;
            if (c == ' ' || c == '\t' || c == '\r') {
                ++i;
                continue;
            }
            if (c == ':' || c == ';') {
                line.toks.push_back({std::string(1, c), static_cast<int>(i) + 1});
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' && raw[i] != '#' &&
                   raw[i] != ':' && raw[i] != ';')
                ++i;
            line.toks.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
        }
        if (!line.toks.empty()) out.push_back(std::move(line));
        pos = eol + 1;
    }
    return out;
}

int last_line_number(std::string_view text) {
    int n = 1;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

void expect_header(const std::vector<Line>& lines, const std::string& magic) {
    if (lines.empty()) throw ParseError(1, 1, "empty file, expected header '" + magic + " 1'");
    const Line& h = lines[0];
    if (h.word(0) != magic) h.fail(0, "expected header '" + magic + " 1'");
    if (h.toks.size() != 2) h.fail(1, "header needs exactly one version field");
    if (h.word(1) != "1") h.fail(1, "unsupported format version '" + h.word(1) + "'");
}

int parse_int(const Line& line, std::size_t tok, const std::string& what) {
    const std::string& s = line.word(tok);
    if (s.empty() || s.size() > 9) line.fail(tok, "invalid " + what + " '" + s + "'");
    for (char c : s)
        if (c < '0' || c > '9') line.fail(tok, "invalid " + what + " '" + s + "'");
    return std::stoi(s);
}

// -------------------------------------------------------- category bodies

// Parses lines [i, end) of a category body. Stops at a line reading `end`
// when nested (consuming it). Semantic checks are positioned.
CategoryFile parse_category_body(const std::vector<Line>& lines, std::size_t& i, bool nested, int eof_line) {
    CategoryFile out;
    int kind_line = 0;
    int kind_col = 1;
    std::set<std::string> object_names, morphism_names;
    std::map<std::string, std::pair<std::string, std::string>> ends;  // morphism -> (src, dst)
    std::set<std::string> identities;
    std::map<std::pair<std::string, std::string>, int> composed;
    std::map<std::string, int> decl_line;
    bool any = false;
    bool closed = false;

    for (; i < lines.size(); ++i) {
        const Line& L = lines[i];
        const std::string& kw = L.word(0);
        if (kw == "end" && nested) {
            L.arity(1);
            ++i;
            closed = true;
            break;
        }
        if (kw == "poset" || kw == "group") {
            L.arity(1);
            if (any) L.fail(0, "'" + kw + "' must be the first line of a category body");
            out.kind = kw == "poset" ? CategoryFile::Kind::Poset : CategoryFile::Kind::Group;
            kind_line = L.number;
            kind_col = L.toks[0].col;
            any = true;
            continue;
        }
        any = true;
        switch (out.kind) {
            case CategoryFile::Kind::Explicit:
                if (kw == "object") {
                    if (L.toks.size() != 2 && L.toks.size() != 3) L.fail(0, "'object' expects a name and an optional identity name");
                    CategoryFile::Object o{L.word(1), L.toks.size() == 3 ? L.word(2) : "id_" + L.word(1)};
                    if (!object_names.insert(o.name).second) L.fail(1, "duplicate object '" + o.name + "'");
                    if (!morphism_names.insert(o.identity).second) L.fail(L.toks.size() - 1, "duplicate morphism name '" + o.identity + "'");
                    ends[o.identity] = {o.name, o.name};
                    identities.insert(o.identity);
                    out.objects.push_back(std::move(o));
                } else if (kw == "morphism") {
                    L.arity(4);
                    CategoryFile::MorphismDecl m{L.word(1), L.word(2), L.word(3)};
                    if (!morphism_names.insert(m.name).second) L.fail(1, "duplicate morphism name '" + m.name + "'");
                    if (!object_names.count(m.src)) L.fail(2, "unknown object '" + m.src + "'");
                    if (!object_names.count(m.dst)) L.fail(3, "unknown object '" + m.dst + "'");
                    ends[m.name] = {m.src, m.dst};
                    decl_line[m.name] = L.number;
                    out.morphisms.push_back(std::move(m));
                } else if (kw == "compose") {
                    L.arity(4);
                    for (std::size_t t = 1; t <= 3; ++t)
                        if (!ends.count(L.word(t))) L.fail(t, "unknown morphism '" + L.word(t) + "'");
                    const auto& g = L.word(1);
                    const auto& f = L.word(2);
                    const auto& h = L.word(3);
                    if (identities.count(g) || identities.count(f))
                        L.fail(identities.count(g) ? 1 : 2, "composites with identities are implicit");
                    if (ends[f].second != ends[g].first) L.fail(1, "'" + g + "' o '" + f + "' is not composable");
                    if (ends[h].first != ends[f].first || ends[h].second != ends[g].second)
                        L.fail(3, "composite '" + h + "' has the wrong source or target");
                    if (!composed.emplace(std::make_pair(g, f), L.number).second)
                        L.fail(1, "composite '" + g + "' o '" + f + "' given twice");
                    out.compositions.push_back({g, f, h});
                } else {
                    L.fail(0, "unknown keyword '" + kw + "'");
                }
                break;
            case CategoryFile::Kind::Poset:
                if (kw == "element") {
                    L.arity(2);
                    if (!object_names.insert(L.word(1)).second) L.fail(1, "duplicate element '" + L.word(1) + "'");
                    out.elements.push_back(L.word(1));
                } else if (kw == "leq") {
                    L.arity(3);
                    for (std::size_t t = 1; t <= 2; ++t)
                        if (!object_names.count(L.word(t))) L.fail(t, "unknown element '" + L.word(t) + "'");
                    out.leq.emplace_back(L.word(1), L.word(2));
                } else {
                    L.fail(0, "unknown keyword '" + kw + "' in poset body");
                }
                break;
            case CategoryFile::Kind::Group:
                if (kw == "element") {
                    L.arity(2);
                    if (!object_names.insert(L.word(1)).second) L.fail(1, "duplicate element '" + L.word(1) + "'");
                    out.elements.push_back(L.word(1));
                } else if (kw == "mul") {
                    L.arity(4);
                    for (std::size_t t = 1; t <= 3; ++t)
                        if (!object_names.count(L.word(t))) L.fail(t, "unknown element '" + L.word(t) + "'");
                    if (!composed.emplace(std::make_pair(L.word(1), L.word(2)), L.number).second)
                        L.fail(1, "product " + L.word(1) + "*" + L.word(2) + " given twice");
                    out.mul.push_back({L.word(1), L.word(2), L.word(3)});
                } else {
                    L.fail(0, "unknown keyword '" + kw + "' in group body");
                }
                break;
        }
    }
    if (nested && !closed) throw ParseError(eof_line, 1, "missing 'end' of category body");

    if (out.kind == CategoryFile::Kind::Explicit) {
        if (out.objects.empty()) throw ParseError(eof_line, 1, "category has no objects");
        // Every composable pair of non-identity morphisms needs a composite.
        for (const auto& f : out.morphisms)
            for (const auto& g : out.morphisms)
                if (f.dst == g.src && !composed.count({g.name, f.name})) {
                    int line = std::max(decl_line[f.name], decl_line[g.name]);
                    throw ParseError(line, 1, "missing composite for the pair (" + g.name + ", " + f.name + "): '" +
                                                  g.name + "' o '" + f.name + "'");
                }
    } else if (out.kind == CategoryFile::Kind::Group) {
        if (out.elements.empty()) throw ParseError(kind_line, kind_col, "group has no elements");
        for (const auto& a : out.elements)
            for (const auto& b : out.elements)
                if (!composed.count({a, b}))
                    throw ParseError(kind_line, kind_col, "multiplication table misses " + a + "*" + b);
    } else if (out.elements.empty()) {
        throw ParseError(kind_line, kind_col, "poset has no elements");
    }
    return out;
}

int index_in(const std::vector<std::string>& names, const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
    throw InputError("unknown name '" + n + "'");
}

void serialize_body(std::ostringstream& out, const CategoryFile& f, const std::string& indent) {
    switch (f.kind) {
        case CategoryFile::Kind::Explicit:
            for (const auto& o : f.objects) {
                out << indent << "object " << o.name;
                if (o.identity != "id_" + o.name) out << ' ' << o.identity;
                out << '\n';
            }
            for (const auto& m : f.morphisms) out << indent << "morphism " << m.name << ' ' << m.src << ' ' << m.dst << '\n';
            for (const auto& c : f.compositions) out << indent << "compose " << c.g << ' ' << c.f << ' ' << c.result << '\n';
            break;
        case CategoryFile::Kind::Poset:
            out << indent << "poset\n";
            for (const auto& e : f.elements) out << indent << "element " << e << '\n';
            for (const auto& [a, b] : f.leq) out << indent << "leq " << a << ' ' << b << '\n';
            break;
        case CategoryFile::Kind::Group:
            out << indent << "group\n";
            for (const auto& e : f.elements) out << indent << "element " << e << '\n';
            for (const auto& m : f.mul) out << indent << "mul " << m[0] << ' ' << m[1] << ' ' << m[2] << '\n';
            break;
    }
}

}  // namespace

CategoryFile parse_category_file(std::string_view text) {
    auto lines = tokenize(text);
    expect_header(lines, "fcat");
    std::size_t i = 1;
    return parse_category_body(lines, i, false, last_line_number(text));
}

std::string serialize_category_file(const CategoryFile& file) {
    std::ostringstream out;
    out << "fcat " << file.version << '\n';
    serialize_body(out, file, "");
    return out.str();
}

CategoryPtr build_category_unchecked(const CategoryFile& file) {
    switch (file.kind) {
        case CategoryFile::Kind::Poset: {
            std::vector<std::pair<int, int>> rel;
            for (const auto& [a, b] : file.leq) rel.emplace_back(index_in(file.elements, a), index_in(file.elements, b));
            return poset_category(file.elements, rel);
        }
        case CategoryFile::Kind::Group: {
            const int k = static_cast<int>(file.elements.size());
            std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
            for (const auto& m : file.mul)
                table[index_in(file.elements, m[0])][index_in(file.elements, m[1])] = index_in(file.elements, m[2]);
            for (const auto& row : table)
                for (int v : row)
                    if (v < 0) throw InputError("group: incomplete multiplication table");
            return group_category(file.elements, table);
        }
        case CategoryFile::Kind::Explicit: break;
    }
    std::vector<std::string> objects;
    std::vector<FiniteCategory::Morphism> mors;
    std::map<std::string, MorId> mor_index;
    for (const auto& o : file.objects) objects.push_back(o.name);
    std::vector<MorId> ids;
    for (std::size_t k = 0; k < file.objects.size(); ++k) {
        ids.push_back(static_cast<MorId>(k));
        mor_index[file.objects[k].identity] = static_cast<MorId>(k);
        mors.push_back({static_cast<ObjId>(k), static_cast<ObjId>(k), file.objects[k].identity});
    }
    for (const auto& m : file.morphisms) {
        if (mor_index.count(m.name)) throw InputError("duplicate morphism name '" + m.name + "'");
        mor_index[m.name] = static_cast<MorId>(mors.size());
        mors.push_back({index_in(objects, m.src), index_in(objects, m.dst), m.name});
    }
    auto lookup = [&](const std::string& n) {
        auto it = mor_index.find(n);
        if (it == mor_index.end()) throw InputError("unknown morphism '" + n + "'");
        return it->second;
    };
    std::map<std::pair<MorId, MorId>, MorId> table;
    for (const auto& c : file.compositions) table[{lookup(c.g), lookup(c.f)}] = lookup(c.result);
    const int k = static_cast<int>(objects.size());
    return build_category(objects, mors, ids, [&](MorId g, MorId f) -> MorId {
        if (g < k) return f;
        if (f < k) return g;
        auto it = table.find({g, f});
        if (it == table.end())
            throw InputError("missing composite for the pair (" + mors[g].name + ", " + mors[f].name + ")");
        return it->second;
    });
}

CategoryPtr parse_category(std::string_view text) {
    auto file = parse_category_file(text);
    CategoryPtr C;
    try {
        C = build_category_unchecked(file);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        // builder errors (poset/group axioms) are reported at the builder keyword
        auto lines = tokenize(text);
        int line = lines.size() > 1 ? lines[1].number : 1;
        throw ParseError(line, 1, e.what());
    }
    auto report = validate_category(*C);
    if (!report.ok()) throw InputError("category axioms violated:\n" + report.summary());
    return C;
}

CategoryFile category_to_file(const FiniteCategory& C) {
    CategoryFile f;
    for (ObjId x = 0; x < C.object_count(); ++x) f.objects.push_back({C.object_name(x), C.morphism_name(C.identity(x))});
    for (MorId m = 0; m < C.morphism_count(); ++m) {
        if (C.is_identity(m)) continue;
        f.morphisms.push_back({C.morphism_name(m), C.object_name(C.src(m)), C.object_name(C.dst(m))});
    }
    for (MorId g = 0; g < C.morphism_count(); ++g) {
        if (C.is_identity(g)) continue;
        for (MorId f1 = 0; f1 < C.morphism_count(); ++f1) {
            if (C.is_identity(f1) || C.dst(f1) != C.src(g)) continue;
            f.compositions.push_back({C.morphism_name(g), C.morphism_name(f1), C.morphism_name(C.compose(g, f1))});
        }
    }
    return f;
}

std::string serialize_category(const FiniteCategory& C) { return serialize_category_file(category_to_file(C)); }

// ------------------------------------------------------------------ modules

namespace {

mpq_class parse_entry(const Line& L, std::size_t tok, const Ring& ring) {
    const std::string& s = L.word(tok);
    std::size_t slash = s.find('/');
    auto digits = [](std::string_view d, bool sign) {
        if (sign && !d.empty() && d[0] == '-') d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits(s, true)
                                         : digits(std::string_view(s).substr(0, slash), true) &&
                                               digits(std::string_view(s).substr(slash + 1), false);
    if (!ok) L.fail(tok, "invalid matrix entry '" + s + "'");
    mpq_class v;
    if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0) L.fail(tok, "zero denominator");
    v.set_str(s, 10);
    v.canonicalize();
    if (ring.kind != RingKind::Rational && v.get_den() != 1) L.fail(tok, "non-integer entry over " + ring.to_string());
    if (ring.kind == RingKind::PrimeField && (v < 0 || v >= ring.p))
        L.fail(tok, "entry '" + s + "' is not a canonical residue mod " + std::to_string(ring.p));
    return v;
}

}  // namespace

ModuleFile parse_module_file(std::string_view text) {
    auto lines = tokenize(text);
    expect_header(lines, "fmod");
    ModuleFile out;
    bool have_ring = false;
    bool have_over = false;
    std::set<std::string> seen_rank, seen_map;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& L = lines[i];
        const std::string& kw = L.word(0);
        if (kw == "ring") {
            if (have_ring) L.fail(0, "ring given twice");
            if (!out.ranks.empty() || !out.maps.empty()) L.fail(0, "'ring' must precede ranks and maps");
            if (L.toks.size() == 2 && L.word(1) == "int") out.ring = Ring::integers();
            else if (L.toks.size() == 2 && L.word(1) == "rat") out.ring = Ring::rationals();
            else if (L.toks.size() == 3 && L.word(1) == "fp") {
                int p = parse_int(L, 2, "prime");
                if (!is_prime(static_cast<std::uint64_t>(p))) L.fail(2, "'" + L.word(2) + "' is not prime");
                out.ring = Ring::prime_field(static_cast<std::uint32_t>(p));
            } else {
                L.fail(1, "expected 'ring int', 'ring rat' or 'ring fp <p>'");
            }
            have_ring = true;
        } else if (kw == "over") {
            L.arity(2);
            if (have_over) L.fail(0, "'over' given twice");
            if (L.word(1) == "category") out.over = ModuleBase::Category;
            else if (L.word(1) == "opposite") out.over = ModuleBase::Opposite;
            else if (L.word(1) == "factorization") out.over = ModuleBase::Factorization;
            else L.fail(1, "expected category, opposite or factorization");
            have_over = true;
        } else if (kw == "rank") {
            if (!have_ring) L.fail(0, "'ring' must come first");
            L.arity(3);
            if (!seen_rank.insert(L.word(1)).second) L.fail(1, "rank of '" + L.word(1) + "' given twice");
            out.ranks.emplace_back(L.word(1), parse_int(L, 2, "rank"));
            out.rank_lines.push_back(L.number);
        } else if (kw == "map") {
            if (!have_ring) L.fail(0, "'ring' must come first");
            if (L.toks.size() < 3 || L.word(2) != ":") L.fail(std::min<std::size_t>(2, L.toks.size()), "expected 'map <morphism> : <rows>'");
            if (!seen_map.insert(L.word(1)).second) L.fail(1, "map of '" + L.word(1) + "' given twice");
            ModuleFile::MapDecl d{L.word(1), {{}}, L.number};
            for (std::size_t t = 3; t < L.toks.size(); ++t) {
                if (L.word(t) == ";") {
                    d.rows.emplace_back();
                    continue;
                }
                if (L.word(t) == ":") L.fail(t, "unexpected ':'");
                d.rows.back().push_back(parse_entry(L, t, out.ring));
            }
            for (std::size_t r = 0; r < d.rows.size(); ++r)
                if (d.rows[r].empty() || d.rows[r].size() != d.rows[0].size())
                    L.fail(2, "matrix rows must be nonempty and of equal length");
            out.maps.push_back(std::move(d));
        } else {
            L.fail(0, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_ring) throw ParseError(last_line_number(text), 1, "missing 'ring' line");
    return out;
}

std::string serialize_module_file(const ModuleFile& file) {
    std::ostringstream out;
    out << "fmod " << file.version << '\n';
    switch (file.ring.kind) {
        case RingKind::Integer: out << "ring int\n"; break;
        case RingKind::Rational: out << "ring rat\n"; break;
        case RingKind::PrimeField: out << "ring fp " << file.ring.p << '\n'; break;
    }
    if (file.over == ModuleBase::Opposite) out << "over opposite\n";
    if (file.over == ModuleBase::Factorization) out << "over factorization\n";
    for (const auto& [name, r] : file.ranks) out << "rank " << name << ' ' << r << '\n';
    for (const auto& m : file.maps) {
        out << "map " << m.morphism << " :";
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (r) out << " ;";
            for (const auto& e : m.rows[r]) out << ' ' << e.get_str();
        }
        out << '\n';
    }
    return out.str();
}

Module build_module(const ModuleFile& file, const CategoryPtr& base) {
    const auto& C = *base;
    auto fail = [](int line, const std::string& msg) -> void {
        if (line > 0) throw ParseError(line, 1, msg);
        throw InputError(msg);
    };
    Module M{base, file.ring, std::vector<int>(C.object_count(), -1), {}};
    for (std::size_t k = 0; k < file.ranks.size(); ++k) {
        int line = k < file.rank_lines.size() ? file.rank_lines[k] : 0;
        auto x = C.find_object(file.ranks[k].first);
        if (!x) fail(line, "unknown object '" + file.ranks[k].first + "'");
        M.ranks[*x] = file.ranks[k].second;
    }
    for (ObjId x = 0; x < C.object_count(); ++x)
        if (M.ranks[x] < 0) throw InputError("module file has no rank for object '" + C.object_name(x) + "'");
    std::vector<bool> given(C.morphism_count(), false);
    M.maps.resize(C.morphism_count());
    for (const auto& d : file.maps) {
        auto m = C.find_morphism(d.morphism);
        if (!m) fail(d.line, "unknown morphism '" + d.morphism + "'");
        int rows = static_cast<int>(d.rows.size());
        int cols = static_cast<int>(d.rows[0].size());
        int want_r = M.ranks[C.dst(*m)];
        int want_c = M.ranks[C.src(*m)];
        if (rows != want_r || cols != want_c)
            fail(d.line, "map of '" + d.morphism + "' is " + std::to_string(rows) + "x" + std::to_string(cols) +
                             ", expected " + std::to_string(want_r) + "x" + std::to_string(want_c));
        Matrix A(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) A(r, c) = d.rows[r][c];
        M.maps[*m] = std::move(A);
        given[*m] = true;
    }
    for (MorId m = 0; m < C.morphism_count(); ++m) {
        if (given[m]) continue;
        int r = M.ranks[C.dst(m)], c = M.ranks[C.src(m)];
        if (C.is_identity(m)) M.maps[m] = Matrix::identity(r);
        else if (r == 0 || c == 0) M.maps[m] = Matrix(r, c);
        else throw InputError("module file has no map for morphism '" + C.morphism_name(m) + "'");
    }
    return M;
}

Module parse_module(std::string_view text, const CategoryPtr& base) { return build_module(parse_module_file(text), base); }

ModuleFile module_to_file(const Module& M, ModuleBase over) {
    const auto& C = *M.base;
    ModuleFile f;
    f.ring = M.ring;
    f.over = over;
    for (ObjId x = 0; x < C.object_count(); ++x) f.ranks.emplace_back(C.object_name(x), M.rank(x));
    for (MorId m = 0; m < C.morphism_count(); ++m) {
        const Matrix& A = M.map(m);
        if (C.is_identity(m) || A.rows() == 0 || A.cols() == 0) continue;
        ModuleFile::MapDecl d{C.morphism_name(m), {}, 0};
        for (int r = 0; r < A.rows(); ++r) {
            d.rows.emplace_back();
            for (int c = 0; c < A.cols(); ++c) d.rows.back().push_back(M.ring.normalize(A(r, c)));
        }
        f.maps.push_back(std::move(d));
    }
    return f;
}

// ----------------------------------------------------------------- functors

namespace {

void parse_mapping_line(const Line& L, FunctorFile::Mapping& m) {
    L.arity(3);
    if (L.word(0) == "object") m.objects.emplace_back(L.word(1), L.word(2));
    else m.morphisms.emplace_back(L.word(1), L.word(2));
}

}  // namespace

FunctorFile parse_functor_file(std::string_view text) {
    auto lines = tokenize(text);
    expect_header(lines, "ffun");
    const int eof = last_line_number(text);
    if (lines.size() < 2) throw ParseError(eof, 1, "expected 'functor' or 'diagram'");
    FunctorFile out;
    const Line& kind = lines[1];
    kind.arity(1);
    std::size_t i = 2;
    if (kind.word(0) == "functor") {
        out.kind = FunctorFile::Kind::Functor;
        bool have_source = false, have_target = false;
        while (i < lines.size()) {
            const Line& L = lines[i];
            const std::string& kw = L.word(0);
            if (kw == "source" || kw == "target") {
                L.arity(1);
                bool& flag = kw == "source" ? have_source : have_target;
                if (flag) L.fail(0, "'" + kw + "' given twice");
                flag = true;
                ++i;
                (kw == "source" ? out.source : out.target) = parse_category_body(lines, i, true, eof);
            } else if (kw == "object" || kw == "morphism") {
                if (!have_source || !have_target) L.fail(0, "mappings must follow the source and target blocks");
                parse_mapping_line(L, out.mapping);
                ++i;
            } else {
                L.fail(0, "unknown keyword '" + kw + "'");
            }
        }
        if (!have_source || !have_target) throw ParseError(eof, 1, "functor needs 'source' and 'target' blocks");
    } else if (kind.word(0) == "diagram") {
        out.kind = FunctorFile::Kind::Diagram;
        bool have_base = false;
        while (i < lines.size()) {
            const Line& L = lines[i];
            const std::string& kw = L.word(0);
            if (kw == "base") {
                L.arity(1);
                if (have_base) L.fail(0, "'base' given twice");
                have_base = true;
                ++i;
                out.base = parse_category_body(lines, i, true, eof);
            } else if (kw == "fiber") {
                L.arity(2);
                if (!have_base) L.fail(0, "'fiber' must follow the base block");
                ++i;
                out.fibers.emplace_back(L.word(1), parse_category_body(lines, i, true, eof));
            } else if (kw == "action") {
                L.arity(2);
                if (!have_base) L.fail(0, "'action' must follow the base block");
                FunctorFile::Mapping m;
                ++i;
                bool closed = false;
                for (; i < lines.size(); ++i) {
                    const Line& A = lines[i];
                    if (A.word(0) == "end") {
                        A.arity(1);
                        ++i;
                        closed = true;
                        break;
                    }
                    if (A.word(0) != "object" && A.word(0) != "morphism")
                        A.fail(0, "expected 'object', 'morphism' or 'end' in action block");
                    parse_mapping_line(A, m);
                }
                if (!closed) throw ParseError(eof, 1, "missing 'end' of action block");
                out.actions.emplace_back(L.word(1), std::move(m));
            } else {
                L.fail(0, "unknown keyword '" + kw + "'");
            }
        }
        if (!have_base) throw ParseError(eof, 1, "diagram needs a 'base' block");
    } else {
        kind.fail(0, "expected 'functor' or 'diagram'");
    }
    return out;
}

std::string serialize_functor_file(const FunctorFile& file) {
    std::ostringstream out;
    out << "ffun " << file.version << '\n';
    auto mapping = [&](const FunctorFile::Mapping& m, const std::string& indent) {
        for (const auto& [a, b] : m.objects) out << indent << "object " << a << ' ' << b << '\n';
        for (const auto& [a, b] : m.morphisms) out << indent << "morphism " << a << ' ' << b << '\n';
    };
    if (file.kind == FunctorFile::Kind::Functor) {
        out << "functor\nsource\n";
        serialize_body(out, file.source, "  ");
        out << "end\ntarget\n";
        serialize_body(out, file.target, "  ");
        out << "end\n";
        mapping(file.mapping, "");
    } else {
        out << "diagram\nbase\n";
        serialize_body(out, file.base, "  ");
        out << "end\n";
        for (const auto& [d, body] : file.fibers) {
            out << "fiber " << d << '\n';
            serialize_body(out, body, "  ");
            out << "end\n";
        }
        for (const auto& [a, m] : file.actions) {
            out << "action " << a << '\n';
            mapping(m, "  ");
            out << "end\n";
        }
    }
    return out.str();
}

namespace {

CategoryPtr build_checked(const CategoryFile& f, const std::string& what) {
    auto C = build_category_unchecked(f);
    auto report = validate_category(*C);
    if (!report.ok()) throw InputError(what + ": category axioms violated:\n" + report.summary());
    return C;
}

Functor build_mapping(const FunctorFile::Mapping& m, const CategoryPtr& S, const CategoryPtr& T, const std::string& what) {
    Functor F{S, T, std::vector<ObjId>(S->object_count(), -1), std::vector<MorId>(S->morphism_count(), -1)};
    for (const auto& [a, b] : m.objects) {
        auto x = S->find_object(a);
        auto y = T->find_object(b);
        if (!x) throw InputError(what + ": unknown source object '" + a + "'");
        if (!y) throw InputError(what + ": unknown target object '" + b + "'");
        if (F.on_objects[*x] >= 0) throw InputError(what + ": object '" + a + "' mapped twice");
        F.on_objects[*x] = *y;
    }
    for (ObjId x = 0; x < S->object_count(); ++x)
        if (F.on_objects[x] < 0) throw InputError(what + ": object '" + S->object_name(x) + "' is not mapped");
    for (const auto& [a, b] : m.morphisms) {
        auto f = S->find_morphism(a);
        auto g = T->find_morphism(b);
        if (!f) throw InputError(what + ": unknown source morphism '" + a + "'");
        if (!g) throw InputError(what + ": unknown target morphism '" + b + "'");
        if (F.on_morphisms[*f] >= 0) throw InputError(what + ": morphism '" + a + "' mapped twice");
        F.on_morphisms[*f] = *g;
    }
    for (MorId f = 0; f < S->morphism_count(); ++f) {
        if (F.on_morphisms[f] >= 0) continue;
        if (!S->is_identity(f)) throw InputError(what + ": morphism '" + S->morphism_name(f) + "' is not mapped");
        F.on_morphisms[f] = T->identity(F.on_objects[S->src(f)]);
    }
    auto report = validate_functor(F);
    if (!report.ok()) throw InputError(what + ": not a functor:\n" + report.summary());
    return F;
}

}  // namespace

Functor build_functor(const FunctorFile& file) {
    if (file.kind != FunctorFile::Kind::Functor) throw InputError("expected a 'functor' file, got a diagram");
    auto S = build_checked(file.source, "source");
    auto T = build_checked(file.target, "target");
    return build_mapping(file.mapping, S, T, "functor");
}

FunctorToCatPtr build_diagram(const FunctorFile& file) {
    if (file.kind != FunctorFile::Kind::Diagram) throw InputError("expected a 'diagram' file, got a functor");
    auto F = std::make_shared<FunctorToCat>();
    F->base = build_checked(file.base, "base");
    const auto& D = *F->base;
    F->fibers.resize(D.object_count());
    for (const auto& [d, body] : file.fibers) {
        auto x = D.find_object(d);
        if (!x) throw InputError("fiber over unknown base object '" + d + "'");
        if (F->fibers[*x]) throw InputError("fiber over '" + d + "' given twice");
        F->fibers[*x] = build_checked(body, "fiber " + d);
    }
    for (ObjId x = 0; x < D.object_count(); ++x)
        if (!F->fibers[x]) throw InputError("no fiber over base object '" + D.object_name(x) + "'");
    F->action.resize(D.morphism_count());
    std::vector<bool> given(D.morphism_count(), false);
    for (const auto& [a, m] : file.actions) {
        auto f = D.find_morphism(a);
        if (!f) throw InputError("action of unknown base morphism '" + a + "'");
        if (given[*f]) throw InputError("action of '" + a + "' given twice");
        F->action[*f] = build_mapping(m, F->fibers[D.src(*f)], F->fibers[D.dst(*f)], "action " + a);
        given[*f] = true;
    }
    for (MorId f = 0; f < D.morphism_count(); ++f) {
        if (given[f]) continue;
        if (!D.is_identity(f)) throw InputError("no action for base morphism '" + D.morphism_name(f) + "'");
        F->action[f] = identity_functor(F->fibers[D.src(f)]);
    }
    auto report = validate_functor_to_cat(*F);
    if (!report.ok()) throw InputError("diagram is not a functor to Cat:\n" + report.summary());
    return F;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace catcoh
