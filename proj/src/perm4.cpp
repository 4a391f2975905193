#include "tri3/perm4.hpp"

#include <algorithm>

namespace tri3 {

const std::array<Perm4, 24>& Perm4::all() {
    static const std::array<Perm4, 24> table = [] {
        std::array<Perm4, 24> t{};
        std::array<int, 4> a{0, 1, 2, 3};
        int k = 0;
        do {
            t[k++] = Perm4(a[0], a[1], a[2], a[3]);
        } while (std::next_permutation(a.begin(), a.end()));
        return t;
    }();
    return table;
}

Perm4 Perm4::from_index(int i) { return all().at(i); }

int Perm4::index() const {
    // Lehmer code.
    static constexpr int fact[4] = {6, 2, 1, 1};
    int idx = 0;
    for (int i = 0; i < 4; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < 4; ++j)
            if (img_[j] < img_[i]) ++smaller;
        idx += smaller * fact[i];
    }
    return idx;
}

std::string Perm4::str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
    return s;
}

}  // namespace tri3
