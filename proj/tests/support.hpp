#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "nonreg/efa.hpp"
#include "nonreg/fatl.hpp"
#include "nonreg/grammar.hpp"
#include "nonreg/pda.hpp"

namespace nonreg::fixture {

inline std::string corpus_path(const std::string& name) { return std::string(NONREG_CORPUS_DIR) + "/" + name; }

inline std::string read_corpus(const std::string& name) {
    std::ifstream in(corpus_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing corpus file " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline cfg::Grammar corpus_grammar(const std::string& name) { return cfg::parse_grammar(read_corpus(name)); }
inline pda::Pda corpus_pda(const std::string& name) { return pda::parse_pda(read_corpus(name)); }
inline efa::Efa corpus_efa(const std::string& name) { return efa::parse_efa(read_corpus(name)); }
inline fatl::Fatl corpus_fatl(const std::string& name) { return fatl::parse_fatl(read_corpus(name)); }

inline const char* const corpus_grammars[] = {"anbn.cfg", "right_linear.cfg", "palindromes.cfg", "chain.cfg",
                                              "anbn_union_regular.cfg"};
inline const char* const corpus_pdas[] = {"anbn.pda", "wcwr.pda", "ab_star.pda"};
inline const char* const corpus_efas[] = {"anbn.efa", "sqrt.efa", "ab_identity.efa", "mod3.efa", "free_close.efa"};
inline const char* const corpus_fatls[] = {"translucent.fatl", "equal_ab.fatl", "even_a.fatl", "cyclic_abc.fatl",
                                           "nondet.fatl"};

} // namespace nonreg::fixture
