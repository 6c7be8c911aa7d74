// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

package geo;

import java.util.ArrayList;
import java.util.List;

public class Sketch {
  private final Canvas canvas;
  private final List<String> notes = new ArrayList<>();
  private int strokes;

  public Sketch(Canvas canvas) {
    this.canvas = canvas;
  }

  public void build() {
    Point center = new Point(10, 20);
    Color color = new Color("red", Color.RED);
    Circle circle = new Circle(center, 5.0, color);
    canvas.add("circle", circle);
    canvas.add("small", circle.scaled(0.5));
    canvas.add(color.getName(), new Circle(new Point(0, 0), 1.0, Color.BLACK));
    circle.moveTo(center.translate(strokes, strokes));
    circle.paint(color.mix(Color.WHITE));
    notes.add("built");
  }

  public void annotate(String text, int[] weights, int index) {
    int weight = weights[index];
    notes.add(text);
    record(weights[index], text);
    record(weight, null);
    record(strokes, "");
    canvas.resize(weights.length, weight);
  }

  private void record(int value, String label) {
    strokes = Math.max(strokes, value);
    StringBuilder sb = new StringBuilder(label);
    sb.append(value);
    sb.append('!');
    sb.append(false);
    notes.add(sb.toString());
  }

  public void replay(Renderer renderer) {
    canvas.drawAll(renderer);
    renderer.label("sketch", '#', false);
    renderer.register(Point.class);
    notes.add(String.valueOf(strokes + 1));
  }
}
