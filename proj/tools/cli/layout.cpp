#include "critlib_cli/layout.hpp"

#include <algorithm>
#include <sstream>

namespace critlib::cli {

std::string dynkin_layout(const DynkinType& type, const IntVector& v, bool padded) {
    const std::size_t n = static_cast<std::size_t>(type.rank);
    if (type.family != 'E' || v.size() != n + (padded ? 1 : 0)) return to_string(v);

    auto at = [&](std::size_t node) -> const Integer& { return v[padded ? node : node - 1]; };
    // bottom row in node numbers; 0 is the extended node
    std::vector<std::size_t> bottom{1};
    for (std::size_t i = 3; i <= n; ++i) bottom.push_back(i);
    std::vector<std::size_t> column_above;  // stacked over node 4, top first
    if (padded && n == 6) column_above.push_back(0);
    if (padded && n == 7) bottom.insert(bottom.begin(), 0);
    if (padded && n == 8) bottom.push_back(0);
    column_above.push_back(2);

    std::size_t width = 1;
    for (const auto& x : v) width = std::max(width, x.get_str().size());
    auto cell = [&](const Integer& x) {
        std::string s = x.get_str();
        return std::string(width - s.size(), ' ') + s;
    };
    const std::size_t col = std::find(bottom.begin(), bottom.end(), 4) - bottom.begin();
    std::ostringstream out;
    for (std::size_t node : column_above) {
        std::string line(col * (width + 1), ' ');
        out << line << cell(at(node)) << "\n";
    }
    for (std::size_t k = 0; k < bottom.size(); ++k) out << (k ? " " : "") << cell(at(bottom[k]));
    return out.str();
}

}  // namespace critlib::cli
