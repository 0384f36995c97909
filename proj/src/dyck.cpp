#include "qshuffle/dyck.hpp"

namespace qshuffle {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
    int h = 0;
    for (char c : steps_) {
        if (c == 'U')
            ++h;
        else if (c == 'D')
            --h;
        else
            throw MalformedPath("DyckPath: step must be 'U' or 'D'");
        if (h < 0) throw MalformedPath("DyckPath: prefix dips below zero");
    }
    if (h != 0) throw MalformedPath("DyckPath: unbalanced steps");
}

std::vector<DyckPath> enumerate_dyck_paths(int n) {
    std::vector<DyckPath> out;
    std::string cur;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == n && downs == n) {
            out.push_back(DyckPath(cur));
            return;
        }
        if (downs < ups) {
            cur.push_back('D');
            self(self, ups, downs + 1);
            cur.pop_back();
        }
        if (ups < n) {
            cur.push_back('U');
            self(self, ups + 1, downs);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

DyckPath dyck_from_word(const ShuffleWord& w) {
    if (!w.empty() && !is_vbasis_word(w))
        throw MalformedPath("dyck_from_word: not a basis word (i1=0, i_j>=0, i_{m+1}<=i_m+1)");
    std::string steps;
    size_t i = 0;
    int height = 0;
    const size_t n = w.size();
    while (i < n) {
        // Maximal strictly increasing run starting at w[i]; the basis-word
        // condition makes each run ascend by exactly 1 per letter, so the
        // run starts at the current descent target.
        size_t j = i + 1;
        while (j < n && w[j] == w[j - 1] + 1) ++j;
        int run = static_cast<int>(j - i);
        steps.append(run, 'U');
        height += run;
        int target = j < n ? w[j] : 0;
        steps.append(height - target, 'D');
        height = target;
        i = j;
    }
    return DyckPath(steps);
}

ShuffleWord word_from_dyck(const DyckPath& p) {
    ShuffleWord w;
    int height = 0;
    const std::string& s = p.steps();
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == 'U') {
            size_t j = i;
            while (j < s.size() && s[j] == 'U') ++j;
            int run = static_cast<int>(j - i);
            for (int d = 0; d < run; ++d) w.push_back(height + d);
            height += run;
            i = j;
        } else {
            --height;
            ++i;
        }
    }
    return w;
}

}  // namespace qshuffle
