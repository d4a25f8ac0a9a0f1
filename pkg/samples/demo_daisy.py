import matplotlib.pyplot as plt
import networkx as nx

import DaisyHamming
from DaisyHamming.common import format_vertex

# daisy graph of H(3,2,2) generated by two vertices
d = DaisyHamming.build_daisy((3, 2, 2), (0, 0, 0), [(2, 1, 0), (1, 0, 1)])
g = d.to_labeled()
print("isometric:", bool(DaisyHamming.is_isometric(g)))

classes = DaisyHamming.delta_classes(g, root=g.root)
colour = {}
for number, cls in enumerate(classes):
    for edge in cls.edges:
        colour[edge] = number

graph = g.to_networkx()
edges = [tuple(sorted(e)) for e in graph.edges()]
pos = nx.spring_layout(graph, seed=15)

plt.figure()
plt.subplot(1, 2, 1)
nx.draw(
    graph,
    pos,
    labels={v: format_vertex(v) for v in graph.nodes()},
    edgelist=edges,
    edge_color=[colour[e] for e in edges],
    edge_cmap=plt.cm.Set1,
    node_color="lightgrey",
)
plt.title("Delta-classes")

# peripheral expansion along the first coordinate
expanded = DaisyHamming.daisy_peripheral_expand(g, [g.vertices, {g.root, (1, 0, 0)}])
big = expanded.to_labeled().to_networkx()
plt.subplot(1, 2, 2)
nx.draw(big, nx.spring_layout(big, seed=15), node_size=80, node_color="tab:blue")
plt.title(f"expanded to {expanded.shape}")

plt.show()
