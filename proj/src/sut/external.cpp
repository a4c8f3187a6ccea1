#include "ogan/sut/external.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>
#include <thread>

namespace ogan::sut {

namespace {

void close_fd(int& fd) {
  if (fd >= 0) {
    ::close(fd);
    fd = -1;
  }
}

}  // namespace

std::string run_child_process(const std::string& command,
                              const std::string& stdin_data) {
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0) {
    throw SutExecutionError("pipe failed: " + std::string(strerror(errno)));
  }

  const pid_t pid = ::fork();
  if (pid < 0) {
    throw SutExecutionError("fork failed: " + std::string(strerror(errno)));
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::close(out_pipe[1]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), nullptr);
    _exit(127);
  }

  close_fd(in_pipe[0]);
  close_fd(out_pipe[1]);

  // Feed stdin from a separate thread; both pipes can fill otherwise.
  std::thread writer([fd = in_pipe[1], &stdin_data]() {
    std::size_t off = 0;
    while (off < stdin_data.size()) {
      const ssize_t n =
          ::write(fd, stdin_data.data() + off, stdin_data.size() - off);
      if (n <= 0) break;
      off += static_cast<std::size_t>(n);
    }
    ::close(fd);
  });

  std::string output;
  char buf[4096];
  for (;;) {
    const ssize_t n = ::read(out_pipe[0], buf, sizeof(buf));
    if (n <= 0) break;
    output.append(buf, static_cast<std::size_t>(n));
  }
  close_fd(out_pipe[0]);
  writer.join();

  int status = 0;
  ::waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw SutExecutionError("SUT process `" + command +
                            "` failed with status " +
                            std::to_string(WIFEXITED(status)
                                               ? WEXITSTATUS(status)
                                               : -1));
  }
  return output;
}

SutDescriptor make_external_sut(
    std::string command, input::InputSpec spec,
    std::vector<std::pair<std::string, stl::SignalRange>> output_ranges,
    std::string default_requirement) {
  spec.validate();
  SutDescriptor sut;
  sut.name = "external:" + command;
  sut.input_spec = spec;
  sut.output_ranges = std::move(output_ranges);
  sut.default_requirement = std::move(default_requirement);
  sut.run = [command, spec](const input::TestInput& test) {
    const stl::Trace inputs = input::to_signals(test, spec);
    std::ostringstream in_csv;
    stl::write_trace_csv(in_csv, inputs);
    const std::string out = run_child_process(command, in_csv.str());
    std::istringstream out_csv(out);
    stl::Trace response = stl::read_trace_csv(out_csv);
    if (response.length() != inputs.length()) {
      throw SutExecutionError(
          "SUT process returned a trace of length " +
          std::to_string(response.length()) + ", expected " +
          std::to_string(inputs.length()));
    }
    return response.merged_with(inputs);
  };
  return sut;
}

}  // namespace ogan::sut
