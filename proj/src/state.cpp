#include "ybmaps/state.hpp"

#include <sstream>

namespace ybmaps {

namespace {

void append_point(std::ostringstream& os, const char* label, const std::vector<Rational>& w,
                  const std::optional<Rational>& aux, const char* aux_label) {
    os << label << "=(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i].str();
    os << ")";
    if (aux) os << " " << aux_label << "=" << aux->str();
}

}  // namespace

std::string to_string(const PairState<Rational>& s) {
    std::ostringstream os;
    append_point(os, "x", s.x, s.X, "X");
    os << "; ";
    append_point(os, "y", s.y, s.Y, "Y");
    if (s.a) os << "; a=" << s.a->str();
    if (s.b) os << " b=" << s.b->str();
    return os.str();
}

std::string to_string(const TripleState<Rational>& s) {
    std::ostringstream os;
    append_point(os, "x", s.x, s.X, "X");
    os << "; ";
    append_point(os, "y", s.y, s.Y, "Y");
    os << "; ";
    append_point(os, "z", s.z, s.Z, "Z");
    if (s.a) os << "; a=" << s.a->str();
    if (s.b) os << " b=" << s.b->str();
    if (s.c) os << " c=" << s.c->str();
    return os.str();
}

}  // namespace ybmaps
