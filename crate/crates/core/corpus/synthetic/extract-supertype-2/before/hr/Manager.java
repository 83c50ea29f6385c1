package hr;

import java.util.ArrayList;
import java.util.List;

public class Manager {
    private String name;
    private final List<String> reports = new ArrayList<>();

    public Manager(String name) {
        this.name = name;
    }

    public String getName() {
        return name;
    }

    public void addReport(String employee) {
        reports.add(employee);
    }

    public int teamSize() {
        return reports.size();
    }
}
