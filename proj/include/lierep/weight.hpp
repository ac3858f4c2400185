#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lierep {

constexpr int kMaxRank = 8;

// Weight in the fundamental-weight basis of a fixed root system. The root
// system itself is passed alongside; only the coordinates live here so that
// weights can be used as cheap hash keys in character tables.
struct Wt {
    std::array<int32_t, kMaxRank> c{};
    uint8_t n = 0;

    Wt() = default;
    explicit Wt(int rank) : n(static_cast<uint8_t>(rank)) {
        if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
    }
    Wt(std::initializer_list<int> xs) : n(static_cast<uint8_t>(xs.size())) {
        if (xs.size() > kMaxRank) throw std::invalid_argument("rank out of range");
        int i = 0;
        for (int x : xs) c[i++] = x;
    }
    static Wt from(const std::vector<int>& xs) {
        Wt w(static_cast<int>(xs.size()));
        for (size_t i = 0; i < xs.size(); ++i) w.c[i] = xs[i];
        return w;
    }

    int rank() const { return n; }
    int32_t operator[](int i) const { return c[i]; }
    int32_t& operator[](int i) { return c[i]; }

    bool operator==(const Wt& o) const { return n == o.n && c == o.c; }
    bool operator!=(const Wt& o) const { return !(*this == o); }
    // Lexicographic; used only for deterministic ordering.
    bool operator<(const Wt& o) const {
        if (n != o.n) return n < o.n;
        for (int i = 0; i < n; ++i)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }

    Wt operator+(const Wt& o) const {
        Wt r = *this;
        for (int i = 0; i < n; ++i) r.c[i] += o.c[i];
        return r;
    }
    Wt operator-(const Wt& o) const {
        Wt r = *this;
        for (int i = 0; i < n; ++i) r.c[i] -= o.c[i];
        return r;
    }
    Wt operator*(int k) const {
        Wt r = *this;
        for (int i = 0; i < n; ++i) r.c[i] *= k;
        return r;
    }
    Wt operator-() const { return *this * -1; }

    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (c[i]) return false;
        return true;
    }
    bool nonneg() const {
        for (int i = 0; i < n; ++i)
            if (c[i] < 0) return false;
        return true;
    }
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (c[i]) s.push_back(i);
        return s;
    }
    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (int i = 0; i < n; ++i) os << (i ? "," : "") << c[i];
        os << ']';
        return os.str();
    }
};

struct WtHash {
    size_t operator()(const Wt& w) const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ w.n;
        for (int i = 0; i < w.n; ++i) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(w.c[i])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

// Parses "1,0,2" or "[1,0,2]".
inline Wt parse_weight(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '[') s = s.substr(1);
    if (!s.empty() && s.back() == ']') s.pop_back();
    std::vector<int> xs;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad weight '" + text + "'");
        xs.push_back(std::stoi(tok));
    }
    if (xs.empty()) throw std::invalid_argument("bad weight '" + text + "'");
    return Wt::from(xs);
}

}  // namespace lierep
