#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ghk {

/// A permutation of {0,...,n-1} in one-line notation (img[i] = w(i)).
/// Composition (w * u)(i) = w(u(i)). Serialized 1-based, "[2,1,3]".
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static Perm transposition(int n, int i, int j);
    /// Adjacent transposition (i, i+1), 0-based i.
    static Perm simple(int n, int i) { return transposition(n, i, i + 1); }
    static Perm longest(int n);  // i -> n-1-i

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    /// Number of inversions.
    int length() const;
    /// Inversion pairs {i,j}, i < j, with w(j) < w(i); 0-based.
    std::vector<std::pair<int, int>> inversions() const;
    /// Reduced word s_{i1}...s_{il} (this = product left to right),
    /// peeled by rightmost descent; 0-based letters.
    std::vector<int> reduced_word() const;
    /// Left descents i with w^{-1}(i) > w^{-1}(i+1), i.e. this = s_i * shorter.
    std::vector<int> left_descents() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    std::string str() const;

  private:
    std::vector<int> img_;
};

/// All of S_n, sorted by (length, one-line lex); the fixed basis order used
/// for principal series modules.
std::vector<Perm> symmetric_group(int n);

/// Sorts a set of permutations by (length, one-line lex).
void sort_by_length(std::vector<Perm>& v);

}  // namespace ghk
