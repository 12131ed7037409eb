#include "torquiv/fano_db.hpp"

namespace torquiv {

// Smooth toric Fano varieties: the five surfaces, the projective line, and
// four threefolds. Rays are listed in the order the Cox variables x_0, x_1,
// ... refer to; surface rays run counterclockwise. Each deg matrix pins the
// class-group basis the stored collection vectors are written in; the dP6
// basis reproduces the published collection and arrow labels. Contraction
// edges are single-ray blowdowns over a shared lattice.
const char* embedded_database_json() {
    return R"JSON([
{
  "dim": 1, "index": 0,
  "fan": {"dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]},
  "deg": [[1, 1]],
  "collection": [[0], [1]]
},
{
  "dim": 2, "index": 0,
  "fan": {"dim": 2, "rays": [[1, 0], [-1, 1], [0, -1]],
          "max_cones": [[0, 1], [1, 2], [2, 0]]},
  "deg": [[1, 1, 1]],
  "collection": [[0], [1], [2]]
},
{
  "dim": 2, "index": 1,
  "fan": {"dim": 2, "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]],
          "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]]},
  "deg": [[1, 0, 1, 0], [0, 1, 0, 1]],
  "collection": [[0, 0], [1, 0], [0, 1], [1, 1]]
},
{
  "dim": 2, "index": 2,
  "fan": {"dim": 2, "rays": [[1, 0], [0, 1], [-1, 1], [0, -1]],
          "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]]},
  "deg": [[1, 0, 1, 1], [0, 1, 0, 1]],
  "collection": [[0, 0], [1, 0], [1, 1], [2, 1]],
  "contractions": [{"target": [2, 0], "ray_matching": [0, 2, 3]}]
},
{
  "dim": 2, "index": 3,
  "fan": {"dim": 2, "rays": [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1]],
          "max_cones": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]},
  "deg": [[1, -1, 1, 0, 0], [1, 0, 0, 1, 0], [0, 1, 0, 0, 1]],
  "collection": [[0, 0, 0], [1, 1, 0], [0, 0, 1], [0, 1, 1], [1, 1, 1]],
  "contractions": [{"target": [2, 2], "ray_matching": [0, 1, 2, 4]},
                   {"target": [2, 1], "ray_matching": [0, 1, 3, 4]}]
},
{
  "dim": 2, "index": 4,
  "fan": {"dim": 2, "rays": [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]],
          "max_cones": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]]},
  "deg": [[1, -1, 1, 0, 0, 0], [-1, 1, 0, 0, 0, 1], [0, 1, -1, 1, 0, 0], [1, 0, 0, 0, 1, -1]],
  "collection": [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 0, 0], [0, 1, 1, 0], [1, 0, 0, 0], [1, 0, 0, 1]],
  "contractions": [{"target": [2, 3], "ray_matching": [0, 1, 2, 3, 4]}]
},
{
  "dim": 3, "index": 0,
  "fan": {"dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],
          "max_cones": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]},
  "deg": [[1, 1, 1, 1]],
  "collection": [[0], [1], [2], [3]]
},
{
  "dim": 3, "index": 1,
  "fan": {"dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1], [0, 0, -1]],
          "max_cones": [[0, 1, 3], [1, 2, 3], [2, 0, 3], [0, 1, 4], [1, 2, 4], [2, 0, 4]]},
  "deg": [[1, 1, 1, 0, 0], [0, 0, 0, 1, 1]],
  "collection": [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1]]
},
{
  "dim": 3, "index": 2,
  "fan": {"dim": 3,
          "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, 0], [0, -1, 0], [0, 0, -1]],
          "max_cones": [[0, 1, 2], [0, 1, 5], [0, 4, 2], [0, 4, 5],
                        [3, 1, 2], [3, 1, 5], [3, 4, 2], [3, 4, 5]]},
  "deg": [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]],
  "collection": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1],
                 [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
},
{
  "dim": 3, "index": 3,
  "fan": {"dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1], [1, 1, 1]],
          "max_cones": [[0, 1, 3], [0, 2, 3], [1, 2, 3], [0, 1, 4], [0, 2, 4], [1, 2, 4]]},
  "deg": [[1, 1, 1, 1, 0], [-1, -1, -1, 0, 1]],
  "collection": [[0, 0], [1, -1], [2, -2], [1, 0], [2, -1], [3, -2]],
  "contractions": [{"target": [3, 0], "ray_matching": [0, 1, 2, 3]}]
}
])JSON";
}

}  // namespace torquiv
