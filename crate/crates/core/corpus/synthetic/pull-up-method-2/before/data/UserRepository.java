package data;

public class UserRepository extends Repository<String> {
    public void save(long id, String user) {
        store.put(id, user);
    }

    public boolean delete(long id) {
        if (!store.containsKey(id)) {
            return false;
        }
        store.remove(id);
        return true;
    }
}
