#include "ghecke/module_rep.hpp"

#include <stdexcept>

namespace ghk {

const CMat& ModuleRep::matrix(const std::string& name) const {
    for (size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == name) return gen_mats[i];
    throw std::invalid_argument("no generator named " + name);
}

bool ModuleRep::has_generator(const std::string& name) const {
    for (const auto& g : gen_names)
        if (g == name) return true;
    return false;
}

std::vector<int> ModuleRep::cgen_indices() const {
    std::vector<int> out;
    for (size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i][0] == 'D' || gen_names[i][0] == 't') out.push_back(static_cast<int>(i));
    return out;
}

Cyclo ModuleRep::weight_value(const CWeight& w, const std::string& gen_name) {
    int idx = std::stoi(gen_name.substr(1)) - 1;
    if (gen_name[0] == 'D') return w.dvals.at(idx);
    if (gen_name[0] == 't') return w.tvals.at(idx);
    throw std::invalid_argument(gen_name + " is not a commutative-frame generator");
}

CMat rep_word(const ModuleRep& m, const std::vector<std::string>& word) {
    CMat out = cidentity(m.dim);
    for (const auto& g : word) out = out * m.matrix(g);
    return out;
}

bool cframe_commutes(const ModuleRep& m) {
    std::vector<int> cg = m.cgen_indices();
    for (size_t a = 0; a < cg.size(); ++a)
        for (size_t b = a + 1; b < cg.size(); ++b) {
            CMat ab = m.gen_mats[cg[a]] * m.gen_mats[cg[b]];
            CMat ba = m.gen_mats[cg[b]] * m.gen_mats[cg[a]];
            if (!is_zero(CMat(ab - ba))) return false;
        }
    return true;
}

}  // namespace ghk
