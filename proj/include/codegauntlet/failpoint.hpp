#ifndef CODEGAUNTLET_FAILPOINT_HPP
#define CODEGAUNTLET_FAILPOINT_HPP

#include <string>
#include <vector>

// Named failure-injection points. Production code calls fire() at places
// where an I/O failure or crash is possible; a test arms a point by name and
// the Nth call to fire() throws. Nothing is armed outside tests, so the cost
// in normal operation is one map lookup against an empty table.
namespace cg::failpoint {

// Thrown when an armed failpoint fires. Harnesses catch this to simulate a
// process dying mid-pass; it deliberately does not derive from cg::Error so
// pass-level error handling cannot swallow it.
class Injected {
  public:
    explicit Injected(std::string point) : point_(std::move(point)) {}
    const std::string& point() const { return point_; }

  private:
    std::string point_;
};

// Arm `name`: the `after_hits`+1-th call to fire(name) throws Injected once,
// then the point disarms itself.
void arm(const std::string& name, int after_hits = 0);

// Disarm everything (harness cleanup between scenarios).
void clear();

// Throws Injected if `name` is armed and its countdown has expired.
void fire(const std::string& name);

// Names of the failpoints compiled into the pipeline, for harnesses that
// want to enumerate every one of them.
std::vector<std::string> registry();

}  // namespace cg::failpoint

#endif
