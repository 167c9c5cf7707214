#include "tsdq/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace tsdq {

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    std::size_t pos() const { return pos_; }
    long long integer(bool allow_sign) {
        skip_ws();
        const std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer", start);
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000000LL) throw ParseError("integer too large", start);
        }
        return neg ? -v : v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

void check_item(const BraidSequence& b, const BraidItem& it) {
    if (it.kind == BraidItem::Kind::Cross) {
        if (it.index < 1 || it.index >= b.strands) throw MoveError("generator out of range");
        if (it.power != 1 && it.power != -1) throw MoveError("crossing power must be +-1");
    } else if (it.index < 1 || it.index > b.strands) {
        throw MoveError("twist strand out of range");
    }
}

bool is_cross(const BraidSequence& b, std::size_t p) {
    return p < b.items.size() && b.items[p].kind == BraidItem::Kind::Cross;
}
bool is_twist(const BraidSequence& b, std::size_t p) {
    return p < b.items.size() && b.items[p].kind == BraidItem::Kind::Twist;
}

// Position after crossing s_gen for a strand at 1-based position p.
int slide(int p, int gen) {
    if (p == gen) return gen + 1;
    if (p == gen + 1) return gen;
    return p;
}

}  // namespace

BraidSequence parse_sequence(const std::string& text) {
    Lexer lx(text);
    if (lx.peek() != 'n') throw ParseError("expected 'n='", lx.pos());
    lx.expect('n');
    lx.expect('=');
    const std::size_t npos = lx.pos();
    const long long n = lx.integer(false);
    if (n < 1 || n > 64) throw ParseError("strand count out of range", npos);
    lx.expect(';');
    BraidSequence b;
    b.strands = static_cast<int>(n);
    while (!lx.done()) {
        const std::size_t at = lx.pos();
        const char c = lx.peek();
        if (c != 't' && c != 's') throw ParseError("expected 't' or 's'", at);
        lx.expect(c);
        const std::size_t ipos = lx.pos();
        const long long idx = lx.integer(false);
        long long pw = 1;
        if (lx.peek() == '^') {
            lx.expect('^');
            pw = lx.integer(true);
        }
        if (c == 't') {
            if (idx < 1 || idx > n) throw ParseError("twist strand out of range", ipos);
            if (pw != 0) b.items.push_back(BraidItem::twist(static_cast<int>(idx), static_cast<int>(pw)));
        } else {
            if (idx < 1 || idx >= n) throw ParseError("generator out of range", ipos);
            if (std::llabs(pw) > 10000) throw ParseError("crossing power too large", ipos);
            const int sign = pw > 0 ? 1 : -1;
            for (long long k = 0; k < std::llabs(pw); ++k) b.items.push_back(BraidItem::cross(static_cast<int>(idx), sign));
        }
    }
    return b;
}

FramedBraidWord parse_word(const std::string& text) { return normalize(parse_sequence(text)); }

FramedBraidWord normalize(const BraidSequence& b) {
    FramedBraidWord w;
    w.strands = b.strands;
    w.twists.assign(b.strands, 0);
    // at[p] = top strand (0-based) currently at position p
    std::vector<int> at(b.strands);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& it : b.items) {
        check_item(b, it);
        if (it.kind == BraidItem::Kind::Twist) {
            w.twists[at[it.index - 1]] += it.power;
        } else {
            w.word.push_back({it.index, it.power});
            std::swap(at[it.index - 1], at[it.index]);
        }
    }
    return w;
}

BraidSequence to_sequence(const FramedBraidWord& b) {
    BraidSequence s;
    s.strands = b.strands;
    for (int p = 0; p < b.strands; ++p)
        if (b.twists[p] != 0) s.items.push_back(BraidItem::twist(p + 1, static_cast<int>(b.twists[p])));
    for (const auto& l : b.word) s.items.push_back(BraidItem::cross(l.gen, l.sign));
    return s;
}

std::string word_to_string(const FramedBraidWord& b) { return sequence_to_string(to_sequence(b)); }

std::string sequence_to_string(const BraidSequence& b) {
    std::string s = "n=" + std::to_string(b.strands) + ";";
    for (const auto& it : b.items) {
        s += it.kind == BraidItem::Kind::Twist ? " t" : " s";
        s += std::to_string(it.index);
        if (it.power != 1) s += "^" + std::to_string(it.power);
    }
    return s;
}

std::vector<int> braid_permutation(const BraidSequence& b) {
    std::vector<int> at(b.strands);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& it : b.items)
        if (it.kind == BraidItem::Kind::Cross) std::swap(at[it.index - 1], at[it.index]);
    std::vector<int> perm(b.strands);
    for (int p = 0; p < b.strands; ++p) perm[at[p]] = p;
    return perm;
}

ClosureInfo closure_components(const BraidSequence& b) {
    ClosureInfo info;
    info.permutation = braid_permutation(b);
    info.component_of.assign(b.strands, -1);
    for (int s = 0; s < b.strands; ++s) {
        if (info.component_of[s] >= 0) continue;
        std::vector<int> cyc;
        for (int p = s; info.component_of[p] < 0; p = info.permutation[p]) {
            info.component_of[p] = static_cast<int>(info.components.size());
            cyc.push_back(p + 1);
        }
        std::sort(cyc.begin(), cyc.end());
        info.components.push_back(std::move(cyc));
    }
    info.framing.assign(info.components.size(), 0);
    std::vector<int> at(b.strands);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& it : b.items) {
        if (it.kind == BraidItem::Kind::Twist) {
            info.framing[info.component_of[at[it.index - 1]]] += it.power;
        } else {
            const int a = info.component_of[at[it.index - 1]], c = info.component_of[at[it.index]];
            if (a == c) info.framing[a] += it.power;
            std::swap(at[it.index - 1], at[it.index]);
        }
    }
    return info;
}

ClosureInfo closure_components(const FramedBraidWord& b) { return closure_components(to_sequence(b)); }

BraidSequence apply_move(const BraidSequence& b, const Move& mv) {
    BraidSequence r = b;
    auto& v = r.items;
    const std::size_t p = mv.position;
    switch (mv.kind) {
    case MoveKind::InsertRII: {
        if (p > v.size()) throw MoveError("position out of range");
        BraidItem a = BraidItem::cross(mv.generator, mv.sign >= 0 ? 1 : -1);
        check_item(b, a);
        BraidItem c = a;
        c.power = -a.power;
        v.insert(v.begin() + p, {a, c});
        break;
    }
    case MoveKind::RemoveRII:
        if (!is_cross(b, p) || !is_cross(b, p + 1) || v[p].index != v[p + 1].index || v[p].power != -v[p + 1].power)
            throw MoveError("no cancelling crossing pair at position");
        v.erase(v.begin() + p, v.begin() + p + 2);
        break;
    case MoveKind::RIII: {
        if (!is_cross(b, p) || !is_cross(b, p + 1) || !is_cross(b, p + 2)) throw MoveError("RIII needs three crossings");
        const auto &a = v[p], &c = v[p + 1], &d = v[p + 2];
        if (a.power != c.power || c.power != d.power || a.index != d.index || std::abs(a.index - c.index) != 1)
            throw MoveError("RIII pattern not present");
        const int i = a.index, j = c.index;
        v[p].index = j;
        v[p + 1].index = i;
        v[p + 2].index = j;
        break;
    }
    case MoveKind::FarCommute:
        if (!is_cross(b, p) || !is_cross(b, p + 1) || std::abs(v[p].index - v[p + 1].index) < 2)
            throw MoveError("no distant crossing pair at position");
        std::swap(v[p], v[p + 1]);
        break;
    case MoveKind::TwistSlide:
        if (is_twist(b, p) && is_cross(b, p + 1)) {
            BraidItem t = v[p];
            t.index = slide(t.index, v[p + 1].index);
            v[p] = v[p + 1];
            v[p + 1] = t;
        } else if (is_cross(b, p) && is_twist(b, p + 1)) {
            BraidItem t = v[p + 1];
            t.index = slide(t.index, v[p].index);
            v[p + 1] = v[p];
            v[p] = t;
        } else {
            throw MoveError("no twist next to a crossing at position");
        }
        break;
    case MoveKind::InsertTwistPair: {
        if (p > v.size()) throw MoveError("position out of range");
        BraidItem a = BraidItem::twist(mv.strand, mv.sign >= 0 ? 1 : -1);
        check_item(b, a);
        BraidItem c = a;
        c.power = -a.power;
        v.insert(v.begin() + p, {a, c});
        break;
    }
    case MoveKind::RemoveTwistPair:
        if (!is_twist(b, p) || !is_twist(b, p + 1) || v[p].index != v[p + 1].index || v[p].power != -v[p + 1].power)
            throw MoveError("no cancelling twist pair at position");
        v.erase(v.begin() + p, v.begin() + p + 2);
        break;
    case MoveKind::Conjugate: {
        std::vector<BraidItem> out;
        for (const auto& it : mv.conjugator) {
            check_item(b, it);
            out.push_back(it);
        }
        out.insert(out.end(), v.begin(), v.end());
        for (auto it = mv.conjugator.rbegin(); it != mv.conjugator.rend(); ++it) {
            BraidItem inv = *it;
            inv.power = -inv.power;
            out.push_back(inv);
        }
        v = std::move(out);
        break;
    }
    case MoveKind::Rotate:
        if (v.empty()) throw MoveError("empty word cannot be rotated");
        std::rotate(v.begin(), v.begin() + 1, v.end());
        break;
    }
    return r;
}

FramedBraidWord apply_move(const FramedBraidWord& b, const Move& mv) {
    return normalize(apply_move(to_sequence(b), mv));
}

std::vector<Move> applicable_moves(const BraidSequence& b) {
    std::vector<Move> moves;
    const auto& v = b.items;
    auto try_add = [&](Move m) {
        try {
            apply_move(b, m);
            moves.push_back(std::move(m));
        } catch (const MoveError&) {
        }
    };
    for (std::size_t p = 0; p < v.size(); ++p) {
        for (auto k : {MoveKind::RemoveRII, MoveKind::RIII, MoveKind::FarCommute, MoveKind::TwistSlide,
                       MoveKind::RemoveTwistPair}) {
            Move m;
            m.kind = k;
            m.position = p;
            try_add(m);
        }
    }
    for (std::size_t p = 0; p <= v.size(); ++p) {
        for (int g = 1; g < b.strands; ++g)
            for (int s : {1, -1}) {
                Move m;
                m.kind = MoveKind::InsertRII;
                m.position = p;
                m.generator = g;
                m.sign = s;
                try_add(m);
            }
        for (int st = 1; st <= b.strands; ++st) {
            Move m;
            m.kind = MoveKind::InsertTwistPair;
            m.position = p;
            m.strand = st;
            try_add(m);
        }
    }
    for (int g = 1; g < b.strands; ++g) {
        Move m;
        m.kind = MoveKind::Conjugate;
        m.conjugator = {BraidItem::cross(g, 1)};
        try_add(m);
    }
    if (!v.empty()) {
        Move m;
        m.kind = MoveKind::Rotate;
        try_add(m);
    }
    return moves;
}

}  // namespace tsdq
