#include "wishart/dimensions.hpp"

#include <sstream>

namespace wishart {

IndexSplit split_indices(std::vector<Rational> alpha) {
    if (alpha.empty()) throw std::invalid_argument("split_indices: empty alpha");
    IndexSplit split;
    split.alpha = std::move(alpha);
    for (std::size_t i = 0; i < split.alpha.size(); ++i) {
        const Rational& a = split.alpha[i];
        if (a.sign() < 0)
            throw std::invalid_argument("split_indices: negative weight at index " +
                                        std::to_string(i + 1));
        if (a.is_zero()) {
            split.s.push_back(static_cast<int>(i + 1));
        } else {
            split.p.push_back(static_cast<int>(i + 1));
            if (split.k == 0 || a < split.alpha_min) split.alpha_min = a;
            ++split.k;
        }
    }
    if (split.p.empty()) throw AllZeroAlpha("split_indices: all weights are zero");
    split.alpha_case =
        split.p.front() == 1 ? AlphaCase::AlphaOnePositive : AlphaCase::AlphaOneZero;
    if (split.alpha_case == AlphaCase::AlphaOneZero) {
        // all indices below p_1 carry zero weight, so epsilon = p_1 - 1
        split.epsilon = split.p.front() - 1;
    }
    return split;
}

std::vector<Rational> parse_alpha(std::string_view text) {
    std::vector<Rational> alpha;
    std::string item;
    std::istringstream is{std::string(text)};
    while (std::getline(is, item, ',')) alpha.push_back(Rational::parse(item));
    if (alpha.empty()) throw std::invalid_argument("parse_alpha: empty list");
    return alpha;
}

}  // namespace wishart
