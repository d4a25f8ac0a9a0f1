import matplotlib.pyplot as plt
import networkx as nx

import DaisyHamming

d = DaisyHamming.build_daisy((3, 3), (0, 0), [(2, 1), (1, 2)])
g = d.to_labeled()
steps = DaisyHamming.decompose_to_k1(g)
for step in steps:
    print(f"contract coordinate {step.j} of ({step.shape}): cover sizes {[len(c) for c in step.covers]}")

# rebuild from K1, drawing every intermediate graph
current = DaisyHamming.LabeledGraph(DaisyHamming.Shape(()), [()])
stages = [current]
for step in reversed(steps):
    current = DaisyHamming.daisy_peripheral_expand(
        current, list(step.covers), position=step.j - 1
    ).to_labeled()
    stages.append(current)

plt.figure()
for i, stage in enumerate(stages, start=1):
    plt.subplot(1, len(stages), i)
    graph = stage.to_networkx()
    nx.draw(graph, nx.spring_layout(graph, seed=15), node_size=120)
    plt.title(f"({stage.shape})" if stage.shape.n else "K1")

print("rebuilt:", stages[-1].vertices == g.vertices)
plt.show()
