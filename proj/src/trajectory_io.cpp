#include "wavedecay/trajectory_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

constexpr char kMagic[8] = {'W', 'D', 'T', 'R', 'A', 'J', '0', '1'};
constexpr std::uint32_t kEndianTag = 0x01020304u;

template <typename T>
void write_pod(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw Error(Errc::io_error, "truncated trajectory file");
    return v;
}

}  // namespace

void save_trajectory(const Trajectory& traj, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(Errc::io_error, "cannot open for writing: " + path);
    os.write(kMagic, sizeof(kMagic));
    write_pod(os, kEndianTag);
    std::string cfg = traj.config.canonical_text();
    write_pod(os, static_cast<std::uint64_t>(cfg.size()));
    os.write(cfg.data(), static_cast<std::streamsize>(cfg.size()));
    write_pod(os, static_cast<std::uint64_t>(traj.n_points()));
    write_pod(os, traj.dr());
    write_pod(os, traj.config.grid.dt());
    write_pod(os, static_cast<std::uint32_t>(traj.config.record_stride));
    write_pod(os, static_cast<std::uint64_t>(traj.n_snaps()));
    for (int i = 0; i < traj.n_snaps(); ++i) {
        write_pod(os, traj.times[i]);
        os.write(reinterpret_cast<const char*>(traj.phi[i].data()),
                 static_cast<std::streamsize>(traj.phi[i].size() * sizeof(double)));
        os.write(reinterpret_cast<const char*>(traj.pi[i].data()),
                 static_cast<std::streamsize>(traj.pi[i].size() * sizeof(double)));
    }
    if (!os) throw Error(Errc::io_error, "write failed: " + path);

    std::ofstream idx(path + ".idx", std::ios::trunc);
    if (!idx) throw Error(Errc::io_error, "cannot open for writing: " + path + ".idx");
    idx.precision(17);
    for (int i = 0; i < traj.n_snaps(); ++i) idx << i << " " << traj.times[i] << "\n";
}

Trajectory load_trajectory(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(Errc::io_error, "cannot open: " + path);
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw Error(Errc::io_error, "not a trajectory file: " + path);
    if (read_pod<std::uint32_t>(is) != kEndianTag)
        throw Error(Errc::io_error, "endianness mismatch: " + path);
    auto cfg_len = read_pod<std::uint64_t>(is);
    std::string cfg_text(cfg_len, '\0');
    is.read(cfg_text.data(), static_cast<std::streamsize>(cfg_len));
    if (!is) throw Error(Errc::io_error, "truncated trajectory file");

    Trajectory traj;
    traj.config = SimConfig::from_text(cfg_text);
    auto n_points = static_cast<int>(read_pod<std::uint64_t>(is));
    (void)read_pod<double>(is);  // dr, implied by the config
    (void)read_pod<double>(is);  // dt
    (void)read_pod<std::uint32_t>(is);
    auto n_snaps = static_cast<int>(read_pod<std::uint64_t>(is));
    if (n_points != traj.config.grid.n_cells + 1)
        throw Error(Errc::io_error, "grid descriptor disagrees with the config");
    for (int i = 0; i < n_snaps; ++i) {
        traj.times.push_back(read_pod<double>(is));
        std::vector<double> phi(n_points), pi(n_points);
        is.read(reinterpret_cast<char*>(phi.data()),
                static_cast<std::streamsize>(phi.size() * sizeof(double)));
        is.read(reinterpret_cast<char*>(pi.data()),
                static_cast<std::streamsize>(pi.size() * sizeof(double)));
        if (!is) throw Error(Errc::io_error, "truncated trajectory file");
        traj.phi.push_back(std::move(phi));
        traj.pi.push_back(std::move(pi));
    }
    return traj;
}

}  // namespace wavedecay
