#include "sievekit/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace sievekit {

namespace {

std::string render_rows(const std::vector<std::vector<std::string>>& rows, long cell_width) {
    size_t w = static_cast<size_t>(cell_width);
    if (w == 0) {
        for (const auto& row : rows)
            for (const auto& s : row) w = std::max(w, s.size());
        w += 2;
    }
    std::ostringstream os;
    for (size_t k = 0; k < rows.size(); ++k) {
        std::string line(k % 2 == 1 ? w / 2 : 0, ' ');
        for (const auto& s : rows[k]) {
            std::string cell = s;
            size_t pad = w > cell.size() ? w - cell.size() : 0;
            line += std::string(pad / 2, ' ') + cell + std::string(pad - pad / 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

} // namespace

std::string render_frieze(const FriezePattern& F, long repeat, long cell_width) {
    std::vector<std::vector<std::string>> rows;
    for (long k = 0; k <= F.width(); ++k) {
        std::vector<std::string> row;
        for (long i = 0; i < F.width() * repeat; ++i) row.push_back(F.value(i, i + k).to_string());
        rows.push_back(std::move(row));
    }
    return render_rows(rows, cell_width);
}

std::string render_frieze(const InfiniteFrieze& F, long nrows, long repeat, long cell_width) {
    std::vector<std::vector<std::string>> rows;
    for (long k = 0; k < nrows; ++k) {
        std::vector<std::string> row;
        for (long i = 0; i < F.period() * repeat; ++i) row.push_back(F.value(i, i + k).to_string());
        rows.push_back(std::move(row));
    }
    return render_rows(rows, cell_width);
}

std::string render_orbifold_table(const OrbifoldFrieze& F) {
    std::ostringstream os;
    os << "order " << F.p() << "\n";
    std::vector<std::vector<std::string>> cells;
    size_t w = 2;
    for (int i = 0; i < F.n(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < F.n(); ++j) {
            row.push_back(F.f(i, j).to_string());
            w = std::max(w, row.back().size());
        }
        cells.push_back(std::move(row));
    }
    for (int i = 0; i < F.n(); ++i) {
        os << "v" << i << " |";
        for (const auto& s : cells[static_cast<size_t>(i)])
            os << " " << std::string(w - s.size(), ' ') << s;
        os << "\n";
    }
    return os.str();
}

std::string render_dyck(const MDyckPath& D) {
    std::ostringstream os;
    os << D.word << "\n";
    os << "heights:";
    for (long h : height_sequence(D)) os << " " << h;
    os << "\n";
    return os.str();
}

} // namespace sievekit
