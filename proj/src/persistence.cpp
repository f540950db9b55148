#include "dcas/persistence.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/core.h>

#include "dcas/errors.hpp"

namespace dcas {

namespace {

constexpr char kMagic[5] = {'D', 'C', 'A', 'S', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
                 static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
    out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<char>(v >> (8 * i));
    out.write(b, 8);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw FormatError("truncated payload");
    return std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 |
           std::uint32_t{b[2]} << 16 | std::uint32_t{b[3]} << 24;
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8))
        throw FormatError("truncated payload");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= std::uint64_t{b[i]} << (8 * i);
    return v;
}

void put_name(std::ostream& out, const std::string& s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_name(std::istream& in) {
    std::uint32_t len = get_u32(in);
    std::string s(len, '\0');
    if (len && !in.read(s.data(), len))
        throw FormatError("truncated name table");
    return s;
}

void put_matrix(std::ostream& out, const BoolMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto w : m.row(i))
            put_u64(out, w);
}

BoolMatrix get_matrix(std::istream& in, std::size_t rows, std::size_t cols) {
    BoolMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto r = m.row(i);
        for (auto& w : r)
            w = get_u64(in);
    }
    if (!m.all_padding_zero())
        throw FormatError("nonzero padding bits in matrix payload");
    return m;
}

std::size_t matrix_bytes(const BoolMatrix& m) {
    return m.rows() * m.words_per_row() * 8;
}

} // namespace

std::size_t save_state(const CharState& state, std::ostream& out) {
    out.write(kMagic, sizeof(kMagic));
    std::size_t n = state.space.object_count();
    std::size_t m = state.space.element_count();
    put_u32(out, static_cast<std::uint32_t>(n));
    put_u32(out, static_cast<std::uint32_t>(m));
    std::size_t bytes = sizeof(kMagic) + 8;
    for (const auto& o : state.space.objects()) {
        put_name(out, o);
        bytes += 4 + o.size();
    }
    for (const auto& el : state.space.elements()) {
        put_name(out, el.name);
        bytes += 4 + el.name.size();
    }
    put_matrix(out, state.m);
    put_matrix(out, state.gamma);
    put_matrix(out, state.pi);
    bytes += matrix_bytes(state.m) + matrix_bytes(state.gamma) + matrix_bytes(state.pi);
    if (!out)
        throw FormatError("write failure");
    return bytes;
}

CharState load_state(std::istream& in, bool trust) {
    char magic[5];
    if (!in.read(magic, sizeof(magic)))
        throw FormatError("truncated payload");
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw FormatError("bad magic");
    std::uint32_t n = get_u32(in);
    std::uint32_t m = get_u32(in);

    CoveringSpace space;
    for (std::uint32_t i = 0; i < n; ++i)
        space.add_object(get_name(in));
    std::vector<std::string> element_names;
    element_names.reserve(m);
    for (std::uint32_t j = 0; j < m; ++j)
        element_names.push_back(get_name(in));

    BoolMatrix mm = get_matrix(in, n, m);
    BoolMatrix gamma = get_matrix(in, n, n);
    BoolMatrix pi = get_matrix(in, n, n);

    // element member sets are M's columns
    for (std::uint32_t j = 0; j < m; ++j) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mm.get(i, j))
                members.push_back(i);
        space.add_element_by_index(element_names[j], std::move(members));
    }

    if (!trust) {
        BoolMatrix mt = mm.transpose();
        if (bool_product(mm, mt) != gamma)
            throw FormatError("stored gamma does not rederive from M");
        if (odot_product(mm, mt) != pi)
            throw FormatError("stored pi does not rederive from M");
        auto rep = space.validate();
        if (!rep.ok())
            throw FormatError("stored space is not a covering: " + rep.violations[0]);
    }
    return {std::move(space), std::move(mm), std::move(gamma), std::move(pi)};
}

void save_state_file(const CharState& state, const std::string& path) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw FormatError(fmt::format("cannot open '{}' for writing", tmp.string()));
        save_state(state, out);
    }
    fs::rename(tmp, target);
}

CharState load_state_file(const std::string& path, bool trust) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError(fmt::format("cannot open '{}'", path));
    return load_state(in, trust);
}

} // namespace dcas
