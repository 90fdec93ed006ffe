#include "walkops.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace qwalk {

using std::complex;

bool Filter::pass(const std::vector<int>& positions) const {
    for (const auto& [lv, ok] : allowed)
        if (!ok.count(positions[lv])) return false;
    return true;
}

Filter Filter::intersect(const Filter& a, const Filter& b) {
    Filter out = a;
    for (const auto& [lv, s] : b.allowed) {
        auto it = out.allowed.find(lv);
        if (it == out.allowed.end()) {
            out.allowed[lv] = s;
        } else {
            std::set<int> both;
            for (int v : it->second)
                if (s.count(v)) both.insert(v);
            it->second = both;
        }
    }
    return out;
}

CoinOp coin_su2(double xi, double zeta, double theta) {
    CoinOp c;
    complex<double> i(0, 1);
    c.U << std::exp(i * xi) * std::cos(theta), std::exp(i * zeta) * std::sin(theta),
        std::exp(-i * zeta) * std::sin(theta), -std::exp(-i * xi) * std::cos(theta);
    c.su2 = {xi, zeta, theta};
    return c;
}

CoinOp coin_matrix(const Eigen::Matrix2cd& U) {
    CoinOp c;
    c.U = U;
    return c;
}

void Program::append(const Program& other) {
    for (size_t i = 0; i < other.ins.size(); ++i)
        push(other.ins[i], other.group[i]);
}

Shift uniform_shift(const Layout& lay, int level, int coin, int dir, Filter f) {
    Shift s;
    s.level = level;
    s.coin = coin;
    s.offs.assign(lay.graph_sizes.at(level), dir);
    s.f = std::move(f);
    return s;
}

std::vector<int> flip_offsets(int graph_size, int bit, Convention conv) {
    std::vector<int> offs;
    for (int m = 0; m < graph_size; ++m) {
        int tgt;
        if (graph_size == 2) {
            tgt = 1 - m;
        } else {
            auto b = position_to_bits(m, graph_size, conv);
            b[bit] ^= 1;
            tgt = vertex_of_bits(b, graph_size, conv);
        }
        int d = ((tgt - m) % graph_size + graph_size) % graph_size;
        if (d == graph_size - 1) d = -1;
        offs.push_back(d);
    }
    return offs;
}

std::pair<std::set<int>, std::set<int>> bit_sets(int graph_size, int bit, Convention conv) {
    std::set<int> ones, zeros;
    for (int m = 0; m < graph_size; ++m) {
        auto b = position_to_bits(m, graph_size, conv);
        (b[bit] ? ones : zeros).insert(m);
    }
    return {ones, zeros};
}

namespace {

void validate_filter(const Filter& f, const Layout& lay, int own_level = -1) {
    for (const auto& [lv, s] : f.allowed) {
        if (lv < 0 || lv >= lay.n_graphs()) throw std::invalid_argument("filter level out of range");
        if (lv == own_level)
            throw std::invalid_argument("filter must not constrain the instruction's own level");
        if (s.empty()) throw std::invalid_argument("empty filter set");
        for (int v : s)
            if (v < 0 || v >= lay.graph_sizes[lv]) throw std::invalid_argument("filter vertex out of range");
    }
}

}  // namespace

void validate_instr(const Instr& in, const Layout& lay) {
    if (const Coin* c = std::get_if<Coin>(&in)) {
        Eigen::Matrix2cd d = c->op.U.adjoint() * c->op.U - Eigen::Matrix2cd::Identity();
        if (d.cwiseAbs().maxCoeff() > 1e-10) throw std::invalid_argument("coin is not unitary");
        validate_filter(c->f, lay);
    } else if (const Shift* s = std::get_if<Shift>(&in)) {
        if (s->level < 0 || s->level >= lay.n_graphs()) throw std::invalid_argument("shift level out of range");
        int sz = lay.graph_sizes[s->level];
        if (static_cast<int>(s->offs.size()) != sz) throw std::invalid_argument("offset list length mismatch");
        std::set<int> image;
        for (int m = 0; m < sz; ++m) image.insert(((m + s->offs[m]) % sz + sz) % sz);
        if (static_cast<int>(image.size()) != sz) throw std::invalid_argument("shift offsets are not a permutation");
        if (s->coin != 0 && s->coin != 1 && s->coin != kCoinBoth) throw std::invalid_argument("bad coin condition");
        validate_filter(s->f, lay, s->level);
    } else if (const PPhase* p = std::get_if<PPhase>(&in)) {
        if (p->level < 0 || p->level >= lay.n_graphs()) throw std::invalid_argument("phase level out of range");
        if (static_cast<int>(p->phases.size()) != lay.graph_sizes[p->level])
            throw std::invalid_argument("phase list length mismatch");
        validate_filter(p->f, lay, p->level);
    }
}

void apply_instr(WalkState& st, const Instr& in) {
    const Layout& lay = st.layout;
    validate_instr(in, lay);
    const int pd = lay.pos_dim();
    int coin;
    std::vector<int> pos;
    if (const Coin* c = std::get_if<Coin>(&in)) {
        for (int p = 0; p < pd; ++p) {
            decode_index(p, lay, coin, pos);
            if (!c->f.pass(pos)) continue;
            complex<double> a0 = st.amp[p], a1 = st.amp[pd + p];
            st.amp[p] = c->op.U(0, 0) * a0 + c->op.U(0, 1) * a1;
            st.amp[pd + p] = c->op.U(1, 0) * a0 + c->op.U(1, 1) * a1;
        }
    } else if (const Shift* s = std::get_if<Shift>(&in)) {
        const int sz = lay.graph_sizes[s->level];
        Eigen::VectorXcd out = Eigen::VectorXcd::Zero(lay.dim());
        for (int w = 0; w < lay.dim(); ++w) {
            decode_index(w, lay, coin, pos);
            if ((s->coin == kCoinBoth || s->coin == coin) && s->f.pass(pos)) {
                int m = pos[s->level];
                pos[s->level] = ((m + s->offs[m]) % sz + sz) % sz;
                out[basis_index(coin, pos, lay)] += st.amp[w];
            } else {
                out[w] += st.amp[w];
            }
        }
        st.amp = out;
    } else if (const PPhase* p = std::get_if<PPhase>(&in)) {
        complex<double> i(0, 1);
        for (int w = 0; w < lay.dim(); ++w) {
            decode_index(w, lay, coin, pos);
            if (p->f.pass(pos)) st.amp[w] *= std::exp(i * p->phases[pos[p->level]]);
        }
    } else {
        const GPhase& g = std::get<GPhase>(in);
        st.amp *= std::exp(complex<double>(0, 1) * g.phi);
    }
}

void apply_program(WalkState& st, const Program& p) {
    for (const Instr& in : p.ins) apply_instr(st, in);
}

Program inverse(const Program& p) {
    Program out;
    out.name = p.name.empty() ? "" : p.name + "^-1";
    for (auto it = p.ins.rbegin(); it != p.ins.rend(); ++it) {
        if (const Coin* c = std::get_if<Coin>(&*it)) {
            out.push(Coin{coin_matrix(c->op.U.adjoint()), c->f});
        } else if (const Shift* s = std::get_if<Shift>(&*it)) {
            Shift inv = *s;
            int sz = static_cast<int>(s->offs.size());
            for (int m = 0; m < sz; ++m) {
                int t = ((m + s->offs[m]) % sz + sz) % sz;
                int d = ((m - t) % sz + sz) % sz;
                if (d > sz / 2) d -= sz;
                inv.offs[t] = d;
            }
            out.push(inv);
        } else if (const PPhase* ph = std::get_if<PPhase>(&*it)) {
            PPhase inv = *ph;
            for (double& x : inv.phases) x = -x;
            out.push(inv);
        } else {
            out.push(GPhase{-std::get<GPhase>(*it).phi});
        }
    }
    return out;
}

void apply_shift(WalkState& st, int level, int coin, int dir, const Filter& f) {
    apply_instr(st, uniform_shift(st.layout, level, coin, dir, f));
}

void apply_coin(WalkState& st, const CoinOp& c, const Filter& f) {
    apply_instr(st, Coin{c, f});
}

void apply_w(WalkState& st, int level, int variant, int dir) {
    // Eqs. 5-6, read state-wise: pre-coin (sigma_x for W^0, sigma_z for W^1),
    // coin-conditioned shift, then a sigma_x correction exactly where the
    // walker still sits at its pre-instruction position tuple.
    const Layout& lay = st.layout;
    if (lay.graph_sizes.at(level) != 4) throw std::invalid_argument("W needs a 4-site graph");
    const int sz = 4;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(lay.dim());
    int coin;
    std::vector<int> pos;
    for (int w = 0; w < lay.dim(); ++w) {
        if (st.amp[w] == complex<double>(0)) continue;
        decode_index(w, lay, coin, pos);
        complex<double> a = st.amp[w];
        int k = coin;
        if (variant == 0) {
            k = 1 - k;  // sigma_x
        } else {
            if (k == 1) a = -a;  // sigma_z
        }
        std::vector<int> p2 = pos;
        if (k == variant) p2[level] = ((p2[level] + dir) % sz + sz) % sz;
        if (p2 == pos) k = 1 - k;  // correction fires at the original position
        out[basis_index(k, p2, lay)] += a;
    }
    st.amp = out;
}

void apply_position_sigma_x(WalkState& st, int m) {
    if (st.layout.n_graphs() != 1) throw std::invalid_argument("single-graph layouts only");
    Filter f;
    f.allowed[0] = {m};
    apply_coin(st, coin_matrix((Eigen::Matrix2cd() << 0, 1, 1, 0).finished()), f);
}

void apply_pair_sigma_x(WalkState& st, int level, int bit) {
    const Layout& lay = st.layout;
    if (lay.graph_sizes.at(level) != 4) throw std::invalid_argument("4-site levels only");
    Shift s;
    s.level = level;
    s.coin = kCoinBoth;
    s.offs = flip_offsets(4, bit, lay.conv);
    apply_instr(st, s);
}

// ---------------- serialization ----------------

namespace {

std::string fmt_d(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_filter(const Filter& f) {
    if (f.empty()) return "";
    std::string s = " filter=[";
    bool first_lv = true;
    for (const auto& [lv, set] : f.allowed) {
        if (!first_lv) s += ";";
        first_lv = false;
        s += std::to_string(lv + 1) + ":{";
        bool first = true;
        for (int v : set) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(v);
        }
        s += "}";
    }
    return s + "]";
}

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool eat(const char* tok) {
        size_t n = std::strlen(tok);
        while (i < s.size() && s[i] == ' ') ++i;
        if (s.compare(i, n, tok) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    void expect(const char* tok) {
        if (!eat(tok)) throw std::invalid_argument("parse error near '" + s.substr(i, 20) + "'");
    }
    double number() {
        while (i < s.size() && s[i] == ' ') ++i;
        size_t end;
        double v = std::stod(s.substr(i), &end);
        i += end;
        return v;
    }
    long integer() {
        while (i < s.size() && s[i] == ' ') ++i;
        size_t end;
        long v = std::stol(s.substr(i), &end, 10);
        i += end;
        return v;
    }
    bool done() {
        while (i < s.size() && s[i] == ' ') ++i;
        return i >= s.size();
    }
};

Filter parse_filter(Cursor& c) {
    Filter f;
    if (!c.eat("filter=[")) return f;
    while (true) {
        int lv = static_cast<int>(c.integer()) - 1;
        c.expect(":{");
        std::set<int> vs;
        while (true) {
            vs.insert(static_cast<int>(c.integer()));
            if (!c.eat(",")) break;
        }
        c.expect("}");
        f.allowed[lv] = vs;
        if (!c.eat(";")) break;
    }
    c.expect("]");
    return f;
}

int parse_group(Cursor& c) {
    if (c.eat("@g=")) return static_cast<int>(c.integer());
    return -1;
}

}  // namespace

std::string to_text(const Program& p) {
    std::ostringstream os;
    if (!p.name.empty()) os << "# " << p.name << "\n";
    for (size_t n = 0; n < p.ins.size(); ++n) {
        const Instr& in = p.ins[n];
        if (const Coin* c = std::get_if<Coin>(&in)) {
            if (c->op.su2) {
                const auto& a = *c->op.su2;
                os << "COIN su2(" << fmt_d(a[0]) << "," << fmt_d(a[1]) << "," << fmt_d(a[2]) << ")";
            } else {
                os << "COIN mat(";
                for (int r = 0; r < 2; ++r)
                    for (int q = 0; q < 2; ++q)
                        os << fmt_d(c->op.U(r, q).real()) << "," << fmt_d(c->op.U(r, q).imag())
                           << ((r == 1 && q == 1) ? "" : ",");
                os << ")";
            }
            os << fmt_filter(c->f);
        } else if (const Shift* s = std::get_if<Shift>(&in)) {
            os << "SHIFT j=" << s->level + 1 << " k=";
            if (s->coin == kCoinBoth)
                os << "*";
            else
                os << s->coin;
            bool uniform = s->offs.size() == 4;
            for (int o : s->offs)
                if (o != s->offs[0]) uniform = false;
            if (uniform && (s->offs[0] == 1 || s->offs[0] == -1)) {
                os << " dir=" << (s->offs[0] == 1 ? "+" : "-");
            } else {
                os << " offs=[";
                for (size_t q = 0; q < s->offs.size(); ++q) os << (q ? "," : "") << s->offs[q];
                os << "]";
            }
            os << fmt_filter(s->f);
        } else if (const PPhase* ph = std::get_if<PPhase>(&in)) {
            os << "PPHASE j=" << ph->level + 1 << " phases=[";
            for (size_t q = 0; q < ph->phases.size(); ++q) os << (q ? "," : "") << fmt_d(ph->phases[q]);
            os << "]" << fmt_filter(ph->f);
        } else {
            os << "GPHASE " << fmt_d(std::get<GPhase>(in).phi);
        }
        if (p.group[n] != -1) os << " @g=" << p.group[n];
        os << "\n";
    }
    return os.str();
}

Program from_text(const std::string& text) {
    Program p;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (p.name.empty() && line.size() > 2) p.name = line.substr(2);
            continue;
        }
        Cursor c{line};
        if (c.eat("COIN ")) {
            CoinOp op;
            if (c.eat("su2(")) {
                double xi = c.number();
                c.expect(",");
                double ze = c.number();
                c.expect(",");
                double th = c.number();
                c.expect(")");
                op = coin_su2(xi, ze, th);
            } else {
                c.expect("mat(");
                double v[8];
                for (int q = 0; q < 8; ++q) {
                    v[q] = c.number();
                    if (q < 7) c.expect(",");
                }
                c.expect(")");
                op.U << complex<double>(v[0], v[1]), complex<double>(v[2], v[3]),
                    complex<double>(v[4], v[5]), complex<double>(v[6], v[7]);
            }
            Filter f = parse_filter(c);
            p.push(Coin{op, f}, parse_group(c));
        } else if (c.eat("SHIFT ")) {
            Shift s;
            c.expect("j=");
            s.level = static_cast<int>(c.integer()) - 1;
            c.expect("k=");
            if (c.eat("*")) {
                s.coin = kCoinBoth;
            } else {
                s.coin = static_cast<int>(c.integer());
                if (s.coin != 0 && s.coin != 1)
                    throw std::invalid_argument("shift coin condition must be 0, 1 or *");
            }
            if (c.eat("dir=")) {
                int dir = c.eat("+") ? 1 : (c.expect("-"), -1);
                s.offs = {dir, dir, dir, dir};  // dir= form is only used for 4-site shifts
            } else {
                c.expect("offs=[");
                s.offs.clear();
                while (true) {
                    s.offs.push_back(static_cast<int>(c.integer()));
                    if (!c.eat(",")) break;
                }
                c.expect("]");
            }
            s.f = parse_filter(c);
            p.push(s, parse_group(c));
        } else if (c.eat("PPHASE ")) {
            PPhase ph;
            c.expect("j=");
            ph.level = static_cast<int>(c.integer()) - 1;
            c.expect("phases=[");
            while (true) {
                ph.phases.push_back(c.number());
                if (!c.eat(",")) break;
            }
            c.expect("]");
            ph.f = parse_filter(c);
            p.push(ph, parse_group(c));
        } else if (c.eat("GPHASE ")) {
            GPhase g{c.number()};
            p.push(g, parse_group(c));
        } else {
            throw std::invalid_argument("unknown instruction line: " + line);
        }
    }
    return p;
}

}  // namespace qwalk
