#include "ghecke/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ghk {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::transposition(int n, int i, int j) {
    if (i == j) throw std::invalid_argument("transposition needs distinct indices");
    Perm w = identity(n);
    std::swap(w.img_[i], w.img_[j]);
    return w;
}

Perm Perm::longest(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
    std::vector<int> img(size());
    for (int i = 0; i < size(); ++i) img[i] = img_[o.img_[i]];
    Perm w;
    w.img_ = std::move(img);
    return w;
}

Perm Perm::inverse() const {
    std::vector<int> img(size());
    for (int i = 0; i < size(); ++i) img[img_[i]] = i;
    Perm w;
    w.img_ = std::move(img);
    return w;
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Perm::length() const {
    int l = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[j] < img_[i]) ++l;
    return l;
}

std::vector<std::pair<int, int>> Perm::inversions() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[j] < img_[i]) out.emplace_back(i, j);
    return out;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    std::vector<int> img = img_;
    // Right multiplication by s_i swaps one-line positions i, i+1; peel at
    // the rightmost descent until sorted.
    while (true) {
        int d = -1;
        for (int i = 0; i + 1 < size(); ++i)
            if (img[i] > img[i + 1]) d = i;
        if (d < 0) break;
        std::swap(img[d], img[d + 1]);
        word.push_back(d);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> Perm::left_descents() const {
    Perm inv = inverse();
    std::vector<int> out;
    for (int i = 0; i + 1 < size(); ++i)
        if (inv.img_[i] > inv.img_[i + 1]) out.push_back(i);
    return out;
}

std::string Perm::str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img_[i] + 1);
    }
    return s + "]";
}

std::vector<Perm> symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> all;
    do {
        all.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    sort_by_length(all);
    return all;
}

void sort_by_length(std::vector<Perm>& v) {
    std::sort(v.begin(), v.end(), [](const Perm& a, const Perm& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.images() < b.images();
    });
}

}  // namespace ghk
