#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lierep {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

// Validates the Cartan classification ranges. D3 is accepted (same diagram
// as A3 but with the D-style node numbering).
inline void validate_simple_type(const SimpleType& t) {
    int n = t.rank;
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n >= 6 && n <= 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok) throw std::invalid_argument("invalid type " + t.str());
}

// A simple algebra or a finite product of simple factors ("C3", "A1xA1xA1").
struct AlgebraType {
    std::vector<SimpleType> factors;

    AlgebraType() = default;
    AlgebraType(Family f, int rank) : factors{{f, rank}} { validate_simple_type(factors[0]); }
    explicit AlgebraType(std::vector<SimpleType> fs) : factors(std::move(fs)) {
        if (factors.empty()) throw std::invalid_argument("empty algebra type");
        for (const auto& f : factors) validate_simple_type(f);
    }

    bool simple() const { return factors.size() == 1; }
    int rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank;
        return r;
    }
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) s += 'x';
            s += factors[i].str();
        }
        return s;
    }
    bool operator==(const AlgebraType& o) const { return factors == o.factors; }

    static AlgebraType parse(const std::string& text) {
        std::vector<SimpleType> fs;
        size_t i = 0;
        while (i < text.size()) {
            char fam = text[i];
            if (fam < 'A' || fam > 'G')
                throw std::invalid_argument("bad algebra family in '" + text + "'");
            size_t j = i + 1;
            while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i + 1) throw std::invalid_argument("missing rank in '" + text + "'");
            fs.push_back({static_cast<Family>(fam), std::stoi(text.substr(i + 1, j - i - 1))});
            if (j < text.size()) {
                if (text[j] != 'x') throw std::invalid_argument("bad separator in '" + text + "'");
                ++j;
            }
            i = j;
        }
        return AlgebraType(std::move(fs));
    }
};

}  // namespace lierep
